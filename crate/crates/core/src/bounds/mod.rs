//! Exact verification of the extremal inequalities.
//!
//! An inequality `a <= b^{q/p}` between nonnegative numbers is checked as
//! `a^p <= b^q` in exact rational arithmetic, so no verdict depends on
//! floating point.

mod background;
mod entropy;
pub mod sweep;
mod theorems;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Value};

pub use background::{check_background_bounds, fomin_bound, kahn_zhao_bound, moon_moser_bound, moon_moser_limit};
pub use entropy::{shearer_report, EntropyReport, ShearerFamily, SHEARER_TOLERANCE};
pub use theorems::{
    check_ds_bound, check_legal_bounds, check_polynomial_bounds, check_prorain_bounds, cycle_extremal_check,
    falling_factorial, LegalBounds, PolynomialBounds,
};

use crate::conditions::format_rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Strict inequality.
    Holds,
    Equality,
    Fails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Fails => "fails",
        }
    }

    pub fn is_failure(self) -> bool {
        self == Verdict::Fails
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One exact comparison `lhs_base^lhs_exp` vs `rhs_base^rhs_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub name: String,
    pub lhs_base: BigRational,
    pub lhs_exp: u32,
    pub rhs_base: BigRational,
    pub rhs_exp: u32,
    pub verdict: Verdict,
    /// `ln(rhs) - ln(lhs)` of the unpowered inequality, for checks whose
    /// constant is a published decimal.
    pub margin: Option<f64>,
}

pub fn exact(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

pub(crate) fn exact_u(x: BigUint) -> BigRational {
    BigRational::from_integer(x.into())
}

fn compare(a: &BigRational, p: u32, b: &BigRational, q: u32) -> Verdict {
    let lhs = num_traits::pow(a.clone(), p as usize);
    let rhs = num_traits::pow(b.clone(), q as usize);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Verdict::Holds,
        std::cmp::Ordering::Equal => Verdict::Equality,
        std::cmp::Ordering::Greater => Verdict::Fails,
    }
}

/// Exact verdict on `a^p <= b^q`.
pub fn check_power_inequality(
    name: impl Into<String>,
    a: &BigRational,
    p: u32,
    b: &BigRational,
    q: u32,
) -> BoundReport {
    BoundReport {
        name: name.into(),
        verdict: compare(a, p, b, q),
        lhs_base: a.clone(),
        lhs_exp: p,
        rhs_base: b.clone(),
        rhs_exp: q,
        margin: None,
    }
}

impl BoundReport {
    pub fn lhs(&self) -> BigRational {
        num_traits::pow(self.lhs_base.clone(), self.lhs_exp as usize)
    }

    pub fn rhs(&self) -> BigRational {
        num_traits::pow(self.rhs_base.clone(), self.rhs_exp as usize)
    }

    /// Recomputes the verdict from the recorded witnesses.
    pub fn recheck(&self) -> Verdict {
        compare(&self.lhs_base, self.lhs_exp, &self.rhs_base, self.rhs_exp)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "check": self.name,
            "lhs_base": format_rational(&self.lhs_base),
            "lhs_exp": self.lhs_exp,
            "rhs_base": format_rational(&self.rhs_base),
            "rhs_exp": self.rhs_exp,
            "lhs": format_rational(&self.lhs()),
            "rhs": format_rational(&self.rhs()),
            "verdict": self.verdict.as_str(),
        });
        if let Some(m) = self.margin {
            v["margin"] = json!(m);
        }
        v
    }
}

/// Outcome of a check that may not apply to the given graph.
#[derive(Clone, Debug, PartialEq)]
pub enum CheckRecord {
    Report(BoundReport),
    NotApplicable { name: String, reason: String },
}

impl CheckRecord {
    pub fn name(&self) -> &str {
        match self {
            CheckRecord::Report(r) => &r.name,
            CheckRecord::NotApplicable { name, .. } => name,
        }
    }

    pub fn report(&self) -> Option<&BoundReport> {
        match self {
            CheckRecord::Report(r) => Some(r),
            CheckRecord::NotApplicable { .. } => None,
        }
    }

    pub fn is_failure(&self) -> bool {
        self.report().is_some_and(|r| r.verdict.is_failure())
    }

    pub fn to_json(&self) -> Value {
        match self {
            CheckRecord::Report(r) => r.to_json(),
            CheckRecord::NotApplicable { name, reason } => json!({
                "check": name,
                "verdict": "not applicable",
                "reason": reason,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_inequalities() {
        let r = check_power_inequality("t", &exact(7), 3, &exact(7), 3);
        assert_eq!(r.verdict, Verdict::Equality);
        let r = check_power_inequality("t", &exact(11), 3, &exact(7), 4);
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.lhs(), exact(1331));
        assert_eq!(r.rhs(), exact(2401));
        let r = check_power_inequality("t", &exact(8), 1, &exact(2), 2);
        assert_eq!(r.verdict, Verdict::Fails);
        assert_eq!(r.recheck(), r.verdict);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(check_power_inequality("t", &half, 2, &half, 1).verdict, Verdict::Holds);
        assert_eq!(
            check_power_inequality("t", &exact(0), 3, &exact(0), 5).verdict,
            Verdict::Equality
        );
    }

    #[test]
    fn json_uses_decimal_strings() {
        let r = check_power_inequality("ds", &exact(11), 3, &exact(7), 4);
        let v = r.to_json();
        assert_eq!(v["lhs"], "1331");
        assert_eq!(v["rhs_base"], "7");
        assert_eq!(v["verdict"], "holds");
        let na = CheckRecord::NotApplicable {
            name: "kz".into(),
            reason: "not regular".into(),
        };
        assert_eq!(na.to_json()["verdict"], "not applicable");
        assert!(!na.is_failure());
    }
}
