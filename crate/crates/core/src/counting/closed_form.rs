use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{xhom_count, ImageGraph};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::limits::Limits;

/// Fibonacci numbers indexed with `F_0 = F_1 = 1`.
pub fn fibonacci(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `id(G) = xhom(G, E_2)`: 2-colorings where every vertex has a neighbor of
/// its own color.
pub fn id_count(g: &Graph, limits: &Limits) -> Result<BigUint> {
    xhom_count(g, &ImageGraph::reflexive_empty(2)?, limits)
}

/// `id(P_n) = 2 F_{n-2}`.
pub fn path_id_closed_form(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::invalid(format!("path_id_closed_form needs n >= 2, got {n}")));
    }
    Ok(fibonacci(n - 2) * 2u32)
}

/// `c_3..=c_6`, computed once by enumerating colorings of the cycles.
pub fn cycle_xhom_base_values() -> [u64; 4] {
    static BASE: OnceLock<[u64; 4]> = OnceLock::new();
    *BASE.get_or_init(|| {
        let limits = Limits::default();
        std::array::from_fn(|i| {
            let c = Family::Cycle(i + 3).build().expect("small cycle");
            let count = id_count(&c, &limits).expect("2^6 colorings is within any cap");
            u64::try_from(count).expect("small count")
        })
    })
}

/// `c_n = xhom(C_n, E_2)` from brute-forced `c_3..c_6` and the recurrence
/// `c_n = 2c_{n-1} - c_{n-2} + c_{n-4}` for `n >= 7`.
pub fn cycle_xhom_closed_form(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle_xhom_closed_form needs n >= 3, got {n}")));
    }
    let base = cycle_xhom_base_values();
    if n <= 6 {
        return Ok(base[n - 3].into());
    }
    // window holds c_{m-4}, c_{m-3}, c_{m-2}, c_{m-1}
    let mut window: [BigInt; 4] = base.map(BigInt::from);
    for _ in 7..=n {
        let next = &window[3] * 2 - &window[2] + &window[0];
        window.rotate_left(1);
        window[3] = next;
    }
    Ok(window[3].to_biguint().expect("c_n is positive"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_indexing() {
        let first: Vec<u64> = (0..8).map(|n| u64::try_from(fibonacci(n)).unwrap()).collect();
        assert_eq!(first, vec![1, 1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn path_values() {
        assert_eq!(path_id_closed_form(2).unwrap(), BigUint::from(2u32));
        assert_eq!(path_id_closed_form(3).unwrap(), BigUint::from(2u32));
        assert_eq!(path_id_closed_form(4).unwrap(), BigUint::from(4u32));
        assert_eq!(path_id_closed_form(10).unwrap(), BigUint::from(68u32));
        assert!(path_id_closed_form(1).is_err());
    }

    #[test]
    fn cycle_values() {
        // c_3 = 2 (monochromatic only), c_4 = 6, c_5 = 12, c_6 = 20 by hand:
        // cyclic binary words with no run of length one
        assert_eq!(cycle_xhom_base_values(), [2, 6, 12, 20]);
        assert_eq!(cycle_xhom_closed_form(7).unwrap(), BigUint::from(2 * 20 - 12 + 2u32));
        assert!(cycle_xhom_closed_form(2).is_err());
    }

    #[test]
    fn path_brute_force_at_ten() {
        let p10 = Family::Path(10).build().unwrap();
        assert_eq!(id_count(&p10, &Limits::default()).unwrap(), BigUint::from(68u32));
    }
}
