use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::error::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "domcount",
    version,
    about = "Exact counts and extremal bound checks for dominating sets and legal colorings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Subcommand, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    /// Count a vertex-subset structure or the legal colorings of a condition
    Count,
    /// Domination polynomial coefficients
    Poly,
    /// Check every applicable bound on each input graph
    BoundCheck,
    /// Exhaustive sweep of one bound over a labeled graph family
    Sweep,
    /// Shearer entropy report for a structure family
    Entropy,
    /// Existence homomorphisms (or homomorphisms with --hom) into an image graph
    Xhom,
}

/// Every flag may also be given in the `--config` TOML file under the same
/// name (`cap-bits = 24`); flags on the command line win.
#[derive(Args, Deserialize, Clone, Debug, Default, PartialEq)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct Options {
    /// TOML file with default values for any of these flags
    #[arg(long, global = true, value_name = "PATH")]
    #[serde(skip)]
    pub config: Option<PathBuf>,

    /// Named graph, e.g. `cycle:6`, `complete_bipartite:3,3`, `complete:3+complete:3`
    #[arg(long, global = true, value_name = "NAME:ARGS")]
    pub family: Option<String>,
    /// A single graph in graph6 format
    #[arg(long, global = true, value_name = "STR")]
    pub graph6: Option<String>,
    /// File with one graph6 string per line
    #[arg(long, global = true, value_name = "PATH")]
    pub catalog: Option<PathBuf>,

    /// ds, sds, minimal-ds, mis, is, or all
    #[arg(long, global = true)]
    pub structure: Option<String>,
    /// dominating, proper, rainbow, at-least:C:M, or file:PATH
    #[arg(long, global = true)]
    pub condition: Option<String>,
    /// Number of colors for proper/rainbow conditions and prorain checks
    #[arg(long, global = true, value_name = "Q")]
    pub colors: Option<usize>,
    /// Color activations, e.g. "1,3/2"
    #[arg(long, global = true, value_name = "P/Q,...")]
    pub weights: Option<String>,
    /// open or closed neighborhoods
    #[arg(long, global = true)]
    pub mode: Option<String>,
    /// Evaluation point for domination polynomials
    #[arg(long, global = true, value_name = "P/Q")]
    pub mu: Option<String>,
    /// hind, eq:Q, kq:Q, or file:PATH
    #[arg(long, global = true)]
    pub image: Option<String>,

    /// Checks for bound-check (comma separated) or the sweep to run
    #[arg(long, global = true)]
    pub check: Option<String>,
    /// Vertex count (the largest one for the cycle sweep)
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Vertex count for the tree sweep
    #[arg(long, global = true, value_name = "N")]
    pub trees: Option<usize>,
    /// Degree for regular-graph sweeps
    #[arg(long, global = true)]
    pub r: Option<usize>,
    /// Count homomorphisms rather than existence homomorphisms
    #[arg(long, global = true)]
    pub hom: bool,
    /// Strong domination (open neighborhoods) for poly
    #[arg(long, global = true)]
    pub strong: bool,

    /// log2 of the largest enumeration allowed (default 30, or DOMCOUNT_CAP_BITS)
    #[arg(long, global = true, value_name = "N")]
    pub cap_bits: Option<u32>,
    /// Worker threads for catalogs
    #[arg(long, global = true, value_name = "N")]
    pub workers: Option<usize>,
    /// Abort on the first malformed catalog line instead of skipping it
    #[arg(long, global = true)]
    pub strict: bool,
    /// Write records to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

fn load_config(path: &Path) -> Result<Options> {
    let text = std::fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

impl Options {
    /// Fills unset flags from the config file (when given) and validates.
    pub fn resolve(self) -> Result<Options> {
        let merged = match self.config.clone() {
            Some(path) => self.merge(load_config(&path)?),
            None => self,
        };
        if merged.workers == Some(0) {
            return Err(Error::Config("--workers must be positive".into()));
        }
        if merged.cap_bits == Some(0) {
            return Err(Error::Config("--cap-bits must be positive".into()));
        }
        Ok(merged)
    }

    fn merge(self, file: Options) -> Options {
        Options {
            config: self.config,
            family: self.family.or(file.family),
            graph6: self.graph6.or(file.graph6),
            catalog: self.catalog.or(file.catalog),
            structure: self.structure.or(file.structure),
            condition: self.condition.or(file.condition),
            colors: self.colors.or(file.colors),
            weights: self.weights.or(file.weights),
            mode: self.mode.or(file.mode),
            mu: self.mu.or(file.mu),
            image: self.image.or(file.image),
            check: self.check.or(file.check),
            n: self.n.or(file.n),
            trees: self.trees.or(file.trees),
            r: self.r.or(file.r),
            hom: self.hom || file.hom,
            strong: self.strong || file.strong,
            cap_bits: self.cap_bits.or(file.cap_bits),
            workers: self.workers.or(file.workers),
            strict: self.strict || file.strict,
            out: self.out.or(file.out),
        }
    }
}
