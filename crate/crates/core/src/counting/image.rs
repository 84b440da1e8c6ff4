use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

pub const MAX_IMAGE_VERTICES: usize = 16;

/// Target graph `H` for (existence) homomorphisms: symmetric, loops allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ImageGraph {
    q: usize,
    adj: Vec<u16>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ImageFile {
    adjacency: Vec<Vec<u8>>,
}

impl ImageGraph {
    /// Builds from a 0/1 adjacency matrix (diagonal entries are loops).
    pub fn from_matrix(rows: &[Vec<u8>]) -> Result<Self> {
        let q = rows.len();
        if q == 0 || q > MAX_IMAGE_VERTICES {
            return Err(Error::invalid(format!(
                "image graphs have 1..={MAX_IMAGE_VERTICES} vertices, got {q}"
            )));
        }
        let mut adj = vec![0u16; q];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != q {
                return Err(Error::invalid(format!(
                    "adjacency row {i} has {} entries, expected {q}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => adj[i] |= 1 << j,
                    _ => return Err(Error::invalid(format!("adjacency entry ({i},{j}) must be 0 or 1"))),
                }
            }
        }
        for i in 0..q {
            for j in 0..q {
                if (adj[i] >> j & 1) != (adj[j] >> i & 1) {
                    return Err(Error::invalid(format!("image adjacency is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(ImageGraph { q, adj })
    }

    /// `H_ind`: vertex 0 unlooped, vertex 1 looped, joined by an edge.
    pub fn h_ind() -> Self {
        ImageGraph {
            q: 2,
            adj: vec![0b10, 0b11],
        }
    }

    /// `E_q`: `q` looped vertices and no other edges.
    pub fn reflexive_empty(q: usize) -> Result<Self> {
        Self::check_q(q)?;
        Ok(ImageGraph {
            q,
            adj: (0..q).map(|i| 1u16 << i).collect(),
        })
    }

    /// `K_q` without loops.
    pub fn complete(q: usize) -> Result<Self> {
        Self::check_q(q)?;
        let full = ((1u32 << q) - 1) as u16;
        Ok(ImageGraph {
            q,
            adj: (0..q).map(|i| full & !(1u16 << i)).collect(),
        })
    }

    fn check_q(q: usize) -> Result<()> {
        if q == 0 || q > MAX_IMAGE_VERTICES {
            return Err(Error::invalid(format!(
                "image graphs have 1..={MAX_IMAGE_VERTICES} vertices, got {q}"
            )));
        }
        Ok(())
    }

    /// `hind`, `eq:Q`, `kq:Q`, or `file:PATH` (JSON `{"adjacency": [[0,1],[1,1]]}`).
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "hind" {
            return Ok(Self::h_ind());
        }
        if let Some(path) = spec.strip_prefix("file:") {
            return Self::load(Path::new(path));
        }
        let parse_q = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::invalid(format!("image size {s:?} is not an integer")))
        };
        if let Some(q) = spec.strip_prefix("eq:") {
            return Self::reflexive_empty(parse_q(q)?);
        }
        if let Some(q) = spec.strip_prefix("kq:") {
            return Self::complete(parse_q(q)?);
        }
        Err(Error::invalid(format!(
            "unknown image graph {spec:?} (hind, eq:Q, kq:Q, file:PATH)"
        )))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file: ImageFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        Self::from_matrix(&file.adjacency)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn adj_mask(&self, x: usize) -> u16 {
        self.adj[x]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x < self.q && y < self.q && self.adj[x] >> y & 1 == 1
    }

    pub fn has_loop(&self, x: usize) -> bool {
        self.has_edge(x, x)
    }
}

impl fmt::Debug for ImageGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ImageGraph(q={}, adj=[", self.q)?;
        for (i, row) in self.adj.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{row:0width$b}", width = self.q)?;
        }
        f.write_str("])")
    }
}
