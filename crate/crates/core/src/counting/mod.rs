//! Exact enumeration kernels.
//!
//! Subset-defined counts (dominating, strong dominating, minimal dominating,
//! independent, maximal independent) walk all `2^n` vertex masks. Coloring
//! and homomorphism counts backtrack over vertices in index order and test
//! each neighborhood constraint as soon as its last member is assigned.

mod closed_form;
mod hom;
mod image;
mod legal;
mod polynomial;
mod subsets;

use std::fmt;
use std::str::FromStr;

pub use closed_form::{cycle_xhom_base_values, cycle_xhom_closed_form, fibonacci, id_count, path_id_closed_form};
pub use hom::{hom_count, weighted_hom_count, xhom_count};
pub use image::ImageGraph;
pub use legal::{count_legal_colorings, for_each_legal_coloring, legal_colorings, weighted_legal_colorings};
pub use polynomial::Polynomial;
pub use subsets::{
    count_independent_sets, count_maximal_independent_sets, count_minimal_dominating_sets, count_structure,
    dominating_polynomial, for_each_dominating_set, UnionTable,
};

use crate::error::{Error, Result};

/// Whether a vertex's own color counts toward its neighborhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `N(v)`.
    Open,
    /// `N[v]`.
    Closed,
}

impl Mode {
    pub fn is_closed(self) -> bool {
        self == Mode::Closed
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "open" => Ok(Mode::Open),
            "closed" => Ok(Mode::Closed),
            other => Err(Error::invalid(format!("mode must be open or closed, got {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Open => "open",
            Mode::Closed => "closed",
        })
    }
}

/// Vertex-subset structures counted by [`count_structure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    /// Dominating sets, `N[S] = V`.
    Dominating,
    /// Strong dominating sets, `N(S) = V`.
    StrongDominating,
    MinimalDominating,
    MaximalIndependent,
    Independent,
}

impl Structure {
    pub const ALL: [Structure; 5] = [
        Structure::Dominating,
        Structure::StrongDominating,
        Structure::MinimalDominating,
        Structure::MaximalIndependent,
        Structure::Independent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Structure::Dominating => "ds",
            Structure::StrongDominating => "sds",
            Structure::MinimalDominating => "minimal-ds",
            Structure::MaximalIndependent => "mis",
            Structure::Independent => "is",
        }
    }
}

impl FromStr for Structure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Structure::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown structure {s:?} (ds, sds, minimal-ds, mis, is)")))
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
