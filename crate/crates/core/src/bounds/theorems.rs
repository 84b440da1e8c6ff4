use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{check_power_inequality, exact_u, BoundReport};
use crate::conditions::{legal_function_count, weighted_legal_function_count, Activation, ColoringCondition};
use crate::counting::{
    count_legal_colorings, cycle_xhom_closed_form, dominating_polynomial, id_count, legal_colorings, Mode,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

fn regular_degree(g: &Graph) -> Result<usize> {
    g.regular_degree().ok_or(Error::NotRegular)
}

/// `q (q-1) ... (q-len+1)`, zero once a factor reaches zero.
pub fn falling_factorial(q: usize, len: usize) -> BigUint {
    if len > q {
        return BigUint::zero();
    }
    (0..len).fold(BigUint::one(), |acc, i| acc * (q - i))
}

/// `ds(G)^{r+1}` vs `ds(K_{r+1})^n = (2^{r+1} - 1)^n`.
pub fn check_ds_bound(g: &Graph, limits: &Limits) -> Result<BoundReport> {
    let r = regular_degree(g)?;
    let ds = count_legal_colorings(g, &ColoringCondition::dominating(), Mode::Closed, limits)?;
    let clique = legal_function_count(r + 1, &ColoringCondition::dominating());
    Ok(check_power_inequality(
        "ds",
        &exact_u(ds),
        r as u32 + 1,
        &exact_u(clique),
        g.n() as u32,
    ))
}

/// The open bound `ℓ(G)^r <= N(r)^n` (absent for `r = 0`) and the closed
/// bound `ℓ_c(G)^{r+1} <= N(r+1)^n`, weighted when `lambda` is given.
#[derive(Clone, Debug, PartialEq)]
pub struct LegalBounds {
    pub open: Option<BoundReport>,
    pub closed: BoundReport,
}

impl LegalBounds {
    pub fn reports(&self) -> impl Iterator<Item = &BoundReport> {
        self.open.iter().chain(std::iter::once(&self.closed))
    }
}

pub fn check_legal_bounds(
    g: &Graph,
    condition: &ColoringCondition,
    lambda: Option<&Activation>,
    limits: &Limits,
) -> Result<LegalBounds> {
    let r = regular_degree(g)?;
    let n = g.n() as u32;
    let local = |size: usize| -> Result<BigRational> {
        match lambda {
            Some(l) => weighted_legal_function_count(size, condition, l),
            None => Ok(exact_u(legal_function_count(size, condition))),
        }
    };
    let prefix = if lambda.is_some() { "legal-weighted" } else { "legal" };
    let open = if r == 0 {
        None
    } else {
        let lhs = legal_colorings(g, condition, Mode::Open, lambda, limits)?;
        let name = format!("{prefix}-open[{}]", condition.name());
        Some(check_power_inequality(name, &lhs, r as u32, &local(r)?, n))
    };
    let lhs = legal_colorings(g, condition, Mode::Closed, lambda, limits)?;
    let name = format!("{prefix}-closed[{}]", condition.name());
    let closed = check_power_inequality(name, &lhs, r as u32 + 1, &local(r + 1)?, n);
    Ok(LegalBounds { open, closed })
}

/// `D_G(μ)^{r+1} <= D_{K_{r+1}}(μ)^n` and, for `r >= 1`,
/// `D^s_G(μ)^{2r} <= D^s_{K_{r,r}}(μ)^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialBounds {
    pub closed: BoundReport,
    pub strong: Option<BoundReport>,
}

impl PolynomialBounds {
    pub fn reports(&self) -> impl Iterator<Item = &BoundReport> {
        std::iter::once(&self.closed).chain(self.strong.iter())
    }
}

pub fn check_polynomial_bounds(g: &Graph, mu: &BigRational, limits: &Limits) -> Result<PolynomialBounds> {
    if !mu.is_positive() {
        return Err(Error::invalid(format!("mu must be positive, got {mu}")));
    }
    let r = regular_degree(g)?;
    let n = g.n() as u32;
    let one_plus = BigRational::one() + mu;
    let lambda = Activation::new(vec![BigRational::one(), mu.clone()])?;

    let clique = num_traits::pow(one_plus.clone(), r + 1) - BigRational::one();
    debug_assert_eq!(
        clique,
        weighted_legal_function_count(r + 1, &ColoringCondition::dominating(), &lambda)?
    );
    let lhs = dominating_polynomial(g, false, limits)?.eval(mu);
    let closed = check_power_inequality("poly-closed", &lhs, r as u32 + 1, &clique, n);

    let strong = if r == 0 {
        None
    } else {
        let side = num_traits::pow(one_plus, r) - BigRational::one();
        let biclique = &side * &side;
        let lhs = dominating_polynomial(g, true, limits)?.eval(mu);
        Some(check_power_inequality("poly-strong", &lhs, 2 * r as u32, &biclique, n))
    };
    Ok(PolynomialBounds { closed, strong })
}

/// Proper and rainbow colorings of the open and closed neighborhood
/// hypergraphs, in the order proper-open, proper-closed, rainbow-open,
/// rainbow-closed. The open checks are omitted when `r = 0`.
pub fn check_prorain_bounds(g: &Graph, q: usize, limits: &Limits) -> Result<Vec<BoundReport>> {
    if q == 0 {
        return Err(Error::invalid("q must be at least 1"));
    }
    let r = regular_degree(g)?;
    let n = g.n() as u32;
    let qq = BigUint::from(q);
    let proper_local = |size: usize| qq.pow(size as u32) - &qq;
    let conditions = [
        ("proper", ColoringCondition::proper(q)?),
        ("rainbow", ColoringCondition::rainbow(q)?),
    ];
    let mut out = Vec::with_capacity(4);
    for (label, condition) in &conditions {
        for mode in [Mode::Open, Mode::Closed] {
            let size = if mode.is_closed() { r + 1 } else { r };
            if size == 0 {
                continue;
            }
            let closed_form = match *label {
                "proper" => proper_local(size),
                _ => falling_factorial(q, size),
            };
            let formula = legal_function_count(size, condition);
            assert_eq!(closed_form, formula, "{label} closed form disagrees with N({size}, L)");
            let lhs = count_legal_colorings(g, condition, mode, limits)?;
            out.push(check_power_inequality(
                format!("{label}-{mode}"),
                &exact_u(lhs),
                size as u32,
                &exact_u(closed_form),
                n,
            ));
        }
    }
    Ok(out)
}

/// `xhom(G, E_2)^6 <= c_6^n` for 2-regular `G`.
pub fn cycle_extremal_check(g: &Graph, limits: &Limits) -> Result<BoundReport> {
    if g.regular_degree() != Some(2) {
        return Err(Error::NotRegularOfDegree(2));
    }
    let lhs = id_count(g, limits)?;
    let c6 = cycle_xhom_closed_form(6)?;
    Ok(check_power_inequality(
        "cycle-extremal",
        &exact_u(lhs),
        6,
        &exact_u(c6),
        g.n() as u32,
    ))
}
