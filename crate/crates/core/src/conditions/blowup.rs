use super::{Activation, ColoringCondition, ConditionKind};
use crate::error::{Error, Result};

/// Integer-weight reduction: each color `x` is split into `λ(x)` copies,
/// and a multiset over the copies is legal iff its projection back onto the
/// original colors is legal. Weighted counts for `(L, λ)` then equal
/// unweighted counts for the blown-up condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub condition: ColoringCondition,
    /// `owner[c]` is the original color of blown-up color `c`.
    pub owner: Vec<usize>,
}

impl Blowup {
    /// Size of the blown-up color set.
    pub fn k(&self) -> usize {
        self.owner.len()
    }
}

pub fn blowup(condition: &ColoringCondition, lambda: &Activation) -> Result<Blowup> {
    lambda.check_colors(condition.k())?;
    let copies = lambda.integer_weights()?;
    let owner: Vec<usize> = copies
        .iter()
        .enumerate()
        .flat_map(|(x, &m)| std::iter::repeat_n(x, m))
        .collect();
    if owner.is_empty() {
        return Err(Error::Activation("blow-up produced an empty color set".into()));
    }
    let condition = ColoringCondition::new(
        owner.len(),
        ConditionKind::Projected {
            base: Box::new(condition.clone()),
            owner: owner.clone(),
        },
    )?;
    Ok(Blowup { condition, owner })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{legal_function_count, weighted_legal_function_count};
    use num_bigint::BigUint;
    use num_rational::BigRational;

    #[test]
    fn identity_blowup() {
        let d = ColoringCondition::dominating();
        let b = blowup(&d, &Activation::ones(2)).unwrap();
        assert_eq!(b.k(), 2);
        for r in 0..6 {
            assert_eq!(legal_function_count(r, &b.condition), legal_function_count(r, &d));
        }
    }

    #[test]
    fn dominating_with_weights_one_two() {
        let d = ColoringCondition::dominating();
        let lambda = Activation::from_integers(&[1, 2]).unwrap();
        let b = blowup(&d, &lambda).unwrap();
        assert_eq!(b.k(), 3);
        assert_eq!(b.owner, vec![0, 1, 1]);
        // s = 1: the single legal color has weight 2, i.e. two copies
        assert_eq!(legal_function_count(1, &b.condition), BigUint::from(2u32));
        // s = 2: 3^2 maps minus the one that avoids both copies of color 1
        assert_eq!(legal_function_count(2, &b.condition), BigUint::from(8u32));
        assert_eq!(
            weighted_legal_function_count(2, &d, &lambda).unwrap(),
            BigRational::from_integer(8.into())
        );
    }

    #[test]
    fn identity_holds_exhaustively() {
        let conds = [
            ColoringCondition::dominating(),
            ColoringCondition::proper(2).unwrap(),
            ColoringCondition::rainbow(2).unwrap(),
            ColoringCondition::proper(1).unwrap(),
            ColoringCondition::rainbow(1).unwrap(),
            ColoringCondition::at_least(2, 0, 2).unwrap(),
        ];
        for cond in &conds {
            let k = cond.k();
            let weight_vectors: Vec<Vec<u64>> = if k == 1 {
                (1..=3).map(|a| vec![a]).collect()
            } else {
                (1..=3).flat_map(|a| (1..=3).map(move |b| vec![a, b])).collect()
            };
            for w in weight_vectors {
                let lambda = Activation::from_integers(&w).unwrap();
                let b = blowup(cond, &lambda).unwrap();
                for s in 0..=4 {
                    assert_eq!(
                        BigRational::from_integer(legal_function_count(s, &b.condition).into()),
                        weighted_legal_function_count(s, cond, &lambda).unwrap(),
                        "{cond} λ={w:?} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_fractional_weights() {
        let lambda = Activation::parse("1,1/2").unwrap();
        assert!(blowup(&ColoringCondition::dominating(), &lambda).is_err());
    }
}
