use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use super::Mode;
use crate::conditions::{Activation, ColoringCondition};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::limits::Limits;

/// Backtracking search over colorings `V -> 0..k`, vertices in index order.
///
/// `checks_at[i]` holds the neighborhoods whose highest member is `i`;
/// they are tested right after vertex `i` is colored.
struct ColoringSearch<'a> {
    n: usize,
    k: usize,
    condition: &'a ColoringCondition,
    checks_at: Vec<Vec<u64>>,
    has_empty_neighborhood: bool,
}

trait Leaf {
    fn leaf(&mut self, colors: &[u8], usage: &[u32]);
}

struct Counter(u128);

impl Leaf for Counter {
    #[inline]
    fn leaf(&mut self, _: &[u8], _: &[u32]) {
        self.0 += 1;
    }
}

/// Leaf counts grouped by color-usage vector; the weight of a coloring
/// depends only on how often each color is used.
#[derive(Default)]
struct UsageHistogram(HashMap<Vec<u32>, u128>);

impl Leaf for UsageHistogram {
    fn leaf(&mut self, _: &[u8], usage: &[u32]) {
        match self.0.get_mut(usage) {
            Some(c) => *c += 1,
            None => {
                self.0.insert(usage.to_vec(), 1);
            }
        }
    }
}

impl UsageHistogram {
    fn total_weight(&self, lambda: &Activation) -> BigRational {
        self.0.iter().fold(BigRational::zero(), |acc, (usage, &count)| {
            acc + lambda.weight(usage) * BigRational::from_integer(count.into())
        })
    }
}

struct Visitor<F>(F);

impl<F: FnMut(&[u8])> Leaf for Visitor<F> {
    fn leaf(&mut self, colors: &[u8], _: &[u32]) {
        (self.0)(colors)
    }
}

impl<'a> ColoringSearch<'a> {
    fn new(g: &Graph, condition: &'a ColoringCondition, mode: Mode, limits: &Limits) -> Result<Self> {
        let (n, k) = (g.n(), condition.k());
        if k == 0 {
            return Err(Error::Condition("empty color set".into()));
        }
        limits.check_search("legal coloring enumeration", n, k)?;
        let mut checks_at = vec![Vec::new(); n];
        let mut has_empty_neighborhood = false;
        for v in 0..n {
            let mask = if mode.is_closed() {
                g.closed_mask(v)
            } else {
                g.adj_mask(v)
            };
            match mask.checked_ilog2() {
                Some(last) => checks_at[last as usize].push(mask),
                None => has_empty_neighborhood = true,
            }
        }
        Ok(ColoringSearch {
            n,
            k,
            condition,
            checks_at,
            has_empty_neighborhood,
        })
    }

    fn run<L: Leaf>(&self, leaf: &mut L) {
        // an empty neighborhood imposes the same constant test on every coloring
        if self.has_empty_neighborhood && !self.condition.accepts(&vec![0; self.k]) {
            return;
        }
        let mut colors = vec![0u8; self.n];
        let mut usage = vec![0u32; self.k];
        let mut scratch = vec![0u32; self.k];
        self.dfs(0, &mut colors, &mut usage, &mut scratch, leaf);
    }

    fn dfs<L: Leaf>(&self, i: usize, colors: &mut [u8], usage: &mut [u32], scratch: &mut [u32], leaf: &mut L) {
        if i == self.n {
            leaf.leaf(colors, usage);
            return;
        }
        for c in 0..self.k {
            colors[i] = c as u8;
            usage[c] += 1;
            let legal = self.checks_at[i].iter().all(|&mask| {
                scratch.fill(0);
                for u in Bits(mask) {
                    scratch[colors[u] as usize] += 1;
                }
                self.condition.accepts(scratch)
            });
            if legal {
                self.dfs(i + 1, colors, usage, scratch, leaf);
            }
            usage[c] -= 1;
        }
    }
}

/// `ℓ(G, L)` (open mode) or `ℓ_c(G, L)` (closed mode).
pub fn count_legal_colorings(g: &Graph, condition: &ColoringCondition, mode: Mode, limits: &Limits) -> Result<BigUint> {
    let search = ColoringSearch::new(g, condition, mode, limits)?;
    let mut counter = Counter(0);
    search.run(&mut counter);
    Ok(counter.0.into())
}

/// `ℓ^λ(G, L)` or `ℓ_c^λ(G, L)`: legal colorings weighted by the product of
/// their colors' activations.
pub fn weighted_legal_colorings(
    g: &Graph,
    condition: &ColoringCondition,
    mode: Mode,
    lambda: &Activation,
    limits: &Limits,
) -> Result<BigRational> {
    lambda.check_colors(condition.k())?;
    let search = ColoringSearch::new(g, condition, mode, limits)?;
    let mut histogram = UsageHistogram::default();
    search.run(&mut histogram);
    Ok(histogram.total_weight(lambda))
}

/// Weighted when `lambda` is given, otherwise the plain count as a rational.
pub fn legal_colorings(
    g: &Graph,
    condition: &ColoringCondition,
    mode: Mode,
    lambda: Option<&Activation>,
    limits: &Limits,
) -> Result<BigRational> {
    match lambda {
        Some(lambda) => weighted_legal_colorings(g, condition, mode, lambda, limits),
        None => Ok(BigRational::from_integer(
            count_legal_colorings(g, condition, mode, limits)?.into(),
        )),
    }
}

/// Calls `f` with every legal coloring, in lexicographic order of the color
/// vector (vertex 0 most significant).
pub fn for_each_legal_coloring(
    g: &Graph,
    condition: &ColoringCondition,
    mode: Mode,
    limits: &Limits,
    f: impl FnMut(&[u8]),
) -> Result<()> {
    let search = ColoringSearch::new(g, condition, mode, limits)?;
    search.run(&mut Visitor(f));
    Ok(())
}
