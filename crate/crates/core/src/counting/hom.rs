use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use super::ImageGraph;
use crate::conditions::Activation;
use crate::error::Result;
use crate::graph::{full_mask, Bits, Graph};
use crate::limits::Limits;

/// Backtracking over maps `V(G) -> V(H)` in vertex order. Each vertex's
/// candidate images are the intersection of the image neighborhoods of its
/// already-mapped neighbors, so every edge is checked when its later
/// endpoint is placed.
fn hom_search(g: &Graph, h: &ImageGraph, leaf: &mut impl FnMut(&[u32])) {
    fn dfs(g: &Graph, h: &ImageGraph, i: usize, images: &mut [u8], usage: &mut [u32], leaf: &mut impl FnMut(&[u32])) {
        if i == g.n() {
            leaf(usage);
            return;
        }
        let mut allowed = ((1u32 << h.q()) - 1) as u16;
        for u in Bits(g.adj_mask(i) & full_mask(i)) {
            allowed &= h.adj_mask(images[u] as usize);
        }
        for x in Bits(allowed as u64) {
            images[i] = x as u8;
            usage[x] += 1;
            dfs(g, h, i + 1, images, usage, leaf);
            usage[x] -= 1;
        }
    }
    let mut images = vec![0u8; g.n()];
    let mut usage = vec![0u32; h.q()];
    dfs(g, h, 0, &mut images, &mut usage, leaf);
}

/// `hom(G, H)`.
pub fn hom_count(g: &Graph, h: &ImageGraph, limits: &Limits) -> Result<BigUint> {
    limits.check_search("homomorphism enumeration", g.n(), h.q())?;
    let mut count = 0u128;
    hom_search(g, h, &mut |_| count += 1);
    Ok(count.into())
}

/// `Z^λ(G, H) = Σ_φ ∏_v λ(φ(v))` over homomorphisms `φ`.
pub fn weighted_hom_count(g: &Graph, h: &ImageGraph, lambda: &Activation, limits: &Limits) -> Result<BigRational> {
    lambda.check_colors(h.q())?;
    limits.check_search("homomorphism enumeration", g.n(), h.q())?;
    let mut histogram: HashMap<Vec<u32>, u128> = HashMap::new();
    hom_search(g, h, &mut |usage| match histogram.get_mut(usage) {
        Some(c) => *c += 1,
        None => {
            histogram.insert(usage.to_vec(), 1);
        }
    });
    Ok(histogram.iter().fold(BigRational::zero(), |acc, (usage, &count)| {
        acc + lambda.weight(usage) * BigRational::from_integer(count.into())
    }))
}

/// `xhom(G, H)`: maps where every vertex `v` has some `w ∈ N(v)` with
/// `φ(v)φ(w) ∈ E(H)`. The condition at `v` is tested once all of `N[v]`
/// is mapped; an isolated vertex makes the count 0.
pub fn xhom_count(g: &Graph, h: &ImageGraph, limits: &Limits) -> Result<BigUint> {
    limits.check_search("existence homomorphism enumeration", g.n(), h.q())?;
    let n = g.n();
    if g.min_degree() == 0 {
        return Ok(BigUint::zero());
    }
    let mut checks_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let last = g.closed_mask(v).ilog2() as usize;
        checks_at[last].push(v);
    }

    fn dfs(g: &Graph, h: &ImageGraph, checks_at: &[Vec<usize>], i: usize, images: &mut [u8]) -> u128 {
        if i == g.n() {
            return 1;
        }
        let mut total = 0;
        for x in 0..h.q() {
            images[i] = x as u8;
            let ok = checks_at[i].iter().all(|&v| {
                let reach = h.adj_mask(images[v] as usize);
                Bits(g.adj_mask(v)).any(|w| reach >> images[w] & 1 == 1)
            });
            if ok {
                total += dfs(g, h, checks_at, i + 1, images);
            }
        }
        total
    }

    let mut images = vec![0u8; n];
    Ok(dfs(g, h, &checks_at, 0, &mut images).into())
}
