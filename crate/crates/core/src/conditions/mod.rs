//! Coloring conditions: families of color multisets that a (closed)
//! neighborhood may display, activations on colors, and the function
//! counts `N(r, L)` and `N^λ(r, L)`.

mod activation;
mod blowup;
mod file;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use activation::Activation;
pub use activation::{format_rational, parse_rational};
pub use blowup::{blowup, Blowup};
pub use file::{load_activation, load_condition, parse_condition_json};

use crate::error::{Error, Result};

/// Largest supported color set.
pub const MAX_COLORS: usize = 64;

/// A multiset over the colors `0..k`, stored as repetition counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorMultiset {
    counts: Vec<u32>,
}

impl ColorMultiset {
    pub fn new(counts: Vec<u32>) -> Self {
        ColorMultiset { counts }
    }

    pub fn from_colors<I: IntoIterator<Item = usize>>(k: usize, colors: I) -> Result<Self> {
        let mut counts = vec![0u32; k];
        for c in colors {
            *counts
                .get_mut(c)
                .ok_or_else(|| Error::Condition(format!("color {c} outside 0..{k}")))? += 1;
        }
        Ok(ColorMultiset { counts })
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Number of colors the multiset ranges over.
    pub fn k(&self) -> usize {
        self.counts.len()
    }

    pub fn size(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }
}

/// Family of allowed count vectors, keyed by multiset size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExplicitFamily {
    sizes: HashMap<usize, HashSet<Vec<u32>>>,
}

impl ExplicitFamily {
    pub fn new(k: usize, entries: impl IntoIterator<Item = ColorMultiset>) -> Result<Self> {
        let mut sizes: HashMap<usize, HashSet<Vec<u32>>> = HashMap::new();
        for m in entries {
            if m.k() != k {
                return Err(Error::Condition(format!(
                    "multiset over {} colors in a family over {k} colors",
                    m.k()
                )));
            }
            sizes.entry(m.size()).or_default().insert(m.counts);
        }
        Ok(ExplicitFamily { sizes })
    }

    pub fn contains(&self, counts: &[u32]) -> bool {
        let size = counts.iter().map(|&c| c as usize).sum();
        self.sizes.get(&size).is_some_and(|set| set.contains(counts))
    }

    pub fn len(&self) -> usize {
        self.sizes.values().map(HashSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entries grouped by size, each group sorted.
    pub fn entries(&self) -> BTreeMap<usize, Vec<Vec<u32>>> {
        self.sizes
            .iter()
            .map(|(&size, set)| {
                let mut v: Vec<Vec<u32>> = set.iter().cloned().collect();
                v.sort();
                (size, v)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConditionKind {
    /// Multisets over `{0, 1}` containing at least one 1.
    Dominating,
    /// At least two distinct colors.
    Proper,
    /// No repeated color.
    Rainbow,
    /// Color `color` appears at least `min` times.
    AtLeast {
        color: usize,
        min: u32,
    },
    Explicit(ExplicitFamily),
    /// Accepts a multiset over the blown-up colors iff its image under
    /// `owner` (new color -> original color) is accepted by `base`.
    Projected {
        base: Box<ColoringCondition>,
        owner: Vec<usize>,
    },
}

/// A membership predicate on multisets of colors from `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringCondition {
    k: usize,
    kind: ConditionKind,
}

fn check_k(k: usize) -> Result<()> {
    if k > MAX_COLORS {
        return Err(Error::Condition(format!(
            "at most {MAX_COLORS} colors are supported, got {k}"
        )));
    }
    Ok(())
}

impl ColoringCondition {
    pub fn new(k: usize, kind: ConditionKind) -> Result<Self> {
        check_k(k)?;
        match &kind {
            ConditionKind::Dominating if k != 2 => {
                return Err(Error::Condition(
                    "the dominating condition is over exactly two colors".into(),
                ))
            }
            ConditionKind::AtLeast { color, .. } if *color >= k => {
                return Err(Error::Condition(format!("color {color} outside 0..{k}")))
            }
            ConditionKind::Projected { base, owner } if owner.len() != k || owner.iter().any(|&o| o >= base.k) => {
                return Err(Error::Condition("projection map does not fit the color sets".into()))
            }
            _ => {}
        }
        Ok(ColoringCondition { k, kind })
    }

    /// `𝒟` over `K = {0, 1}`.
    pub fn dominating() -> Self {
        ColoringCondition {
            k: 2,
            kind: ConditionKind::Dominating,
        }
    }

    /// Multisets with at least two different colors, over `q` colors.
    pub fn proper(q: usize) -> Result<Self> {
        Self::new(q, ConditionKind::Proper)
    }

    /// Sets (no repeated color), over `q` colors.
    pub fn rainbow(q: usize) -> Result<Self> {
        Self::new(q, ConditionKind::Rainbow)
    }

    pub fn at_least(k: usize, color: usize, min: u32) -> Result<Self> {
        Self::new(k, ConditionKind::AtLeast { color, min })
    }

    pub fn explicit(k: usize, entries: impl IntoIterator<Item = ColorMultiset>) -> Result<Self> {
        check_k(k)?;
        Ok(ColoringCondition {
            k,
            kind: ConditionKind::Explicit(ExplicitFamily::new(k, entries)?),
        })
    }

    /// `dominating`, `proper`, `rainbow`, `at-least:COLOR:MIN`, or
    /// `file:PATH`; `colors` is ignored for `dominating` and file conditions.
    pub fn parse_spec(spec: &str, colors: usize) -> Result<Self> {
        let spec = spec.trim();
        if let Some(path) = spec.strip_prefix("file:") {
            return load_condition(std::path::Path::new(path));
        }
        if let Some(rest) = spec.strip_prefix("at-least:") {
            let (c, m) = rest
                .split_once(':')
                .ok_or_else(|| Error::Condition("expected at-least:COLOR:MIN".into()))?;
            let color = c.parse().map_err(|_| Error::Condition(format!("bad color {c:?}")))?;
            let min = m.parse().map_err(|_| Error::Condition(format!("bad count {m:?}")))?;
            return Self::at_least(colors, color, min);
        }
        match spec {
            "dominating" | "ds" => Ok(Self::dominating()),
            "proper" => Self::proper(colors),
            "rainbow" => Self::rainbow(colors),
            other => Err(Error::Condition(format!("unknown condition {other:?}"))),
        }
    }

    /// Size of the color set `K`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> &ConditionKind {
        &self.kind
    }

    /// Membership test on a count vector of length `k`. Total over all sizes.
    #[inline]
    pub fn accepts(&self, counts: &[u32]) -> bool {
        debug_assert_eq!(counts.len(), self.k);
        match &self.kind {
            ConditionKind::Dominating => counts[1] >= 1,
            ConditionKind::Proper => counts.iter().filter(|&&c| c > 0).count() >= 2,
            ConditionKind::Rainbow => counts.iter().all(|&c| c <= 1),
            ConditionKind::AtLeast { color, min } => counts[*color] >= *min,
            ConditionKind::Explicit(family) => family.contains(counts),
            ConditionKind::Projected { base, owner } => {
                let mut projected = vec![0u32; base.k];
                for (c, &count) in counts.iter().enumerate() {
                    projected[owner[c]] += count;
                }
                base.accepts(&projected)
            }
        }
    }

    pub fn accepts_multiset(&self, m: &ColorMultiset) -> Result<bool> {
        if m.k() != self.k {
            return Err(Error::Condition(format!(
                "multiset over {} colors tested against a condition over {}",
                m.k(),
                self.k
            )));
        }
        Ok(self.accepts(m.counts()))
    }

    /// Short identifier used in reports.
    pub fn name(&self) -> String {
        match &self.kind {
            ConditionKind::Dominating => "dominating".into(),
            ConditionKind::Proper => format!("proper[{}]", self.k),
            ConditionKind::Rainbow => format!("rainbow[{}]", self.k),
            ConditionKind::AtLeast { color, min } => format!("at-least[{}]:{color}:{min}", self.k),
            ConditionKind::Explicit(f) => format!("explicit[{}]:{}", self.k, f.len()),
            ConditionKind::Projected { base, .. } => format!("blowup[{}]({})", self.k, base.name()),
        }
    }
}

impl fmt::Display for ColoringCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Calls `f` with every count vector of length `k` summing to `size`.
pub fn for_each_multiset<F: FnMut(&[u32])>(size: usize, k: usize, mut f: F) {
    fn rec<F: FnMut(&[u32])>(counts: &mut Vec<u32>, left: u32, k: usize, f: &mut F) {
        if counts.len() + 1 == k {
            counts.push(left);
            f(counts);
            counts.pop();
            return;
        }
        for c in (0..=left).rev() {
            counts.push(c);
            rec(counts, left - c, k, f);
            counts.pop();
        }
    }
    if k == 0 {
        if size == 0 {
            f(&[]);
        }
        return;
    }
    rec(&mut Vec::with_capacity(k), size as u32, k, &mut f);
}

fn multinomial_of(counts: &[u32]) -> BigUint {
    // product of binomials C(c_1, c_1) C(c_1 + c_2, c_2) ...
    let mut total = 0u64;
    let mut out = BigUint::one();
    for &c in counts {
        for i in 1..=c as u64 {
            out *= total + i;
            out /= i;
        }
        total += c as u64;
    }
    out
}

/// Number of maps `[size] -> K` whose multiset image is exactly `counts`.
pub fn multinomial(size: usize, counts: &ColorMultiset) -> Result<BigUint> {
    if counts.size() != size {
        return Err(Error::SizeMismatch {
            expected: size,
            actual: counts.size(),
        });
    }
    Ok(multinomial_of(counts.counts()))
}

/// `N(r, L)`: maps `[r] -> K` with multiset image in `L`, summed over legal
/// multisets of size `r`.
pub fn legal_function_count(r: usize, condition: &ColoringCondition) -> BigUint {
    let mut total = BigUint::zero();
    for_each_multiset(r, condition.k(), |counts| {
        if condition.accepts(counts) {
            total += multinomial_of(counts);
        }
    });
    total
}

/// `N^λ(r, L)`: as [`legal_function_count`] with each map weighted by the
/// product of the activations of its values.
pub fn weighted_legal_function_count(
    r: usize,
    condition: &ColoringCondition,
    lambda: &Activation,
) -> Result<BigRational> {
    lambda.check_colors(condition.k())?;
    let mut total = BigRational::zero();
    for_each_multiset(r, condition.k(), |counts| {
        if condition.accepts(counts) {
            total += BigRational::from_integer(multinomial_of(counts).into()) * lambda.weight(counts);
        }
    });
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    /// Direct loop over all `k^r` maps, testing the multiset image.
    fn brute_force(r: usize, cond: &ColoringCondition) -> u64 {
        let k = cond.k();
        let total = (k as u64).pow(r as u32);
        (0..total)
            .filter(|&code| {
                let mut counts = vec![0u32; k];
                let mut x = code;
                for _ in 0..r {
                    counts[(x % k as u64) as usize] += 1;
                    x /= k as u64;
                }
                cond.accepts(&counts)
            })
            .count() as u64
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(5, &ColorMultiset::new(vec![2, 2, 1])).unwrap(), big(30));
        assert_eq!(multinomial(4, &ColorMultiset::new(vec![0, 4, 0])).unwrap(), big(1));
        // the 16 maps [4] -> {a, b} with image {a, a, b, b}: C(4, 2) = 6
        assert_eq!(multinomial(4, &ColorMultiset::new(vec![2, 2])).unwrap(), big(6));
        assert!(matches!(
            multinomial(3, &ColorMultiset::new(vec![2, 2])),
            Err(Error::SizeMismatch { expected: 3, actual: 4 })
        ));
    }

    #[test]
    fn function_counts() {
        assert_eq!(legal_function_count(3, &ColoringCondition::dominating()), big(7));
        for q in 1..=6u64 {
            assert_eq!(
                legal_function_count(2, &ColoringCondition::rainbow(q as usize).unwrap()),
                big(q * (q - 1))
            );
        }
        assert_eq!(legal_function_count(3, &ColoringCondition::proper(2).unwrap()), big(6));
    }

    #[test]
    fn weighted_function_counts() {
        let d = ColoringCondition::dominating();
        let ones = Activation::ones(2);
        assert_eq!(weighted_legal_function_count(3, &d, &ones).unwrap(), rat(7, 1));
        let lambda = Activation::parse("1,2").unwrap();
        // 3 maps with one 1 (weight 2), 3 with two (4), 1 with three (8)
        assert_eq!(weighted_legal_function_count(3, &d, &lambda).unwrap(), rat(26, 1));

        let (a, b) = (rat(3, 7), rat(5, 2));
        let lambda = Activation::new(vec![a.clone(), b.clone()]).unwrap();
        let rainbow = ColoringCondition::rainbow(2).unwrap();
        assert_eq!(
            weighted_legal_function_count(2, &rainbow, &lambda).unwrap(),
            rat(2, 1) * a * b
        );
        assert!(weighted_legal_function_count(2, &rainbow, &Activation::ones(3)).is_err());
    }

    #[test]
    fn degenerate_families() {
        let empty = ColoringCondition::explicit(2, []).unwrap();
        for r in 0..4 {
            assert_eq!(legal_function_count(r, &empty), big(0));
        }
        let only_empty = ColoringCondition::explicit(2, [ColorMultiset::new(vec![0, 0])]).unwrap();
        assert_eq!(legal_function_count(0, &only_empty), big(1));
        assert_eq!(legal_function_count(1, &only_empty), big(0));
        // the empty multiset is a rainbow set but never dominating or proper
        assert!(ColoringCondition::rainbow(3).unwrap().accepts(&[0, 0, 0]));
        assert!(!ColoringCondition::dominating().accepts(&[0, 0]));
        assert!(!ColoringCondition::proper(3).unwrap().accepts(&[0, 0, 0]));
    }

    #[test]
    fn construction_errors() {
        assert!(ColoringCondition::new(3, ConditionKind::Dominating).is_err());
        assert!(ColoringCondition::at_least(2, 2, 1).is_err());
        assert!(ColoringCondition::explicit(2, [ColorMultiset::new(vec![1, 1, 1])]).is_err());
        assert!(ColoringCondition::proper(65).is_err());
        assert!(ColoringCondition::parse_spec("nope", 2).is_err());
        assert_eq!(
            ColoringCondition::parse_spec("at-least:1:1", 2).unwrap().name(),
            "at-least[2]:1:1"
        );
    }

    #[test]
    fn at_least_one_generalizes_dominating() {
        let d = ColoringCondition::dominating();
        let a = ColoringCondition::at_least(2, 1, 1).unwrap();
        for r in 0..8 {
            assert_eq!(legal_function_count(r, &d), legal_function_count(r, &a));
        }
    }

    fn builtin_conditions(k: usize) -> Vec<ColoringCondition> {
        let mut out = vec![
            ColoringCondition::proper(k).unwrap(),
            ColoringCondition::rainbow(k).unwrap(),
        ];
        if k == 2 {
            out.push(ColoringCondition::dominating());
        }
        for color in 0..k {
            for min in 0..3 {
                out.push(ColoringCondition::at_least(k, color, min).unwrap());
            }
        }
        out
    }

    #[test]
    fn formula_matches_brute_force() {
        for k in 1..=3 {
            for cond in builtin_conditions(k) {
                for r in 0..=5 {
                    assert_eq!(
                        legal_function_count(r, &cond),
                        big(brute_force(r, &cond)),
                        "{cond} r={r}"
                    );
                    assert_eq!(
                        weighted_legal_function_count(r, &cond, &Activation::ones(k)).unwrap(),
                        BigRational::from_integer(legal_function_count(r, &cond).into())
                    );
                }
            }
        }
    }

    fn all_multisets(k: usize, max: usize) -> Vec<ColorMultiset> {
        let mut out = Vec::new();
        for size in 0..=max {
            for_each_multiset(size, k, |c| out.push(ColorMultiset::new(c.to_vec())));
        }
        out
    }

    proptest! {
        #[test]
        fn monotone_in_the_family(k in 1usize..=3, mask1 in any::<u64>(), extra in any::<u64>(), r in 0usize..=4) {
            let universe = all_multisets(k, 4);
            let pick = |mask: u64| -> Vec<ColorMultiset> {
                universe.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, m)| m.clone()).collect()
            };
            let small = pick(mask1);
            let large = pick(mask1 | extra);
            let l1 = ColoringCondition::explicit(k, small).unwrap();
            let l2 = ColoringCondition::explicit(k, large).unwrap();
            prop_assert!(legal_function_count(r, &l1) <= legal_function_count(r, &l2));
        }
    }
}
