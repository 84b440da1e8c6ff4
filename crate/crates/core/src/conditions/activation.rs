use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Positive rational weight per color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Activation {
    weights: Vec<BigRational>,
}

/// Parses `p`, `p/q`, or a finite decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Activation(format!("{text:?} is not a rational number"));
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Activation(format!("{text:?} has a zero denominator")));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, scale));
    }
    Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?))
}

pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl Activation {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        if let Some((i, w)) = weights.iter().enumerate().find(|(_, w)| !w.is_positive()) {
            return Err(Error::Activation(format!(
                "weight of color {i} is {}, activations must be positive",
                format_rational(w)
            )));
        }
        Ok(Activation { weights })
    }

    /// The constant activation `λ ≡ 1` on `k` colors.
    pub fn ones(k: usize) -> Self {
        Activation {
            weights: vec![BigRational::one(); k],
        }
    }

    /// Comma-separated rationals, e.g. `"1,3/2"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::from_strs(text.split(','))
    }

    pub fn from_strs<'a, I: IntoIterator<Item = &'a str>>(items: I) -> Result<Self> {
        Self::new(items.into_iter().map(parse_rational).collect::<Result<_>>()?)
    }

    pub fn from_integers(weights: &[u64]) -> Result<Self> {
        Self::new(weights.iter().map(|&w| BigRational::from_integer(w.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn is_integral(&self) -> bool {
        self.weights.iter().all(BigRational::is_integer)
    }

    pub fn is_constant_one(&self) -> bool {
        self.weights.iter().all(One::is_one)
    }

    pub(crate) fn check_colors(&self, k: usize) -> Result<()> {
        if self.weights.len() != k {
            return Err(Error::Activation(format!(
                "{} weights given for {k} colors",
                self.weights.len()
            )));
        }
        Ok(())
    }

    /// Integer weights, failing if any weight is fractional.
    pub fn integer_weights(&self) -> Result<Vec<usize>> {
        self.weights
            .iter()
            .map(|w| {
                if !w.is_integer() {
                    return Err(Error::Activation(format!(
                        "weight {} is not an integer",
                        format_rational(w)
                    )));
                }
                w.numer()
                    .to_usize()
                    .ok_or_else(|| Error::Activation("weight too large to blow up".into()))
            })
            .collect()
    }

    /// Scales by the lcm of the denominators: returns the integral activation
    /// and the scale factor.
    pub fn clear_denominators(&self) -> (Activation, BigUint) {
        let lcm = self.weights.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let scale = BigRational::from_integer(lcm.clone());
        let weights = self.weights.iter().map(|w| w * &scale).collect();
        (Activation { weights }, lcm.to_biguint().expect("lcm is positive"))
    }

    /// `∏_x λ(x)^{counts[x]}`.
    pub fn weight(&self, counts: &[u32]) -> BigRational {
        let mut out = BigRational::one();
        for (w, &c) in self.weights.iter().zip(counts) {
            if c > 0 {
                out *= num_traits::pow(w.clone(), c as usize);
            }
        }
        out
    }
}

impl fmt::Display for Activation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&format_rational(w))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        let a = Activation::parse("1, 3/2 ,0.25").unwrap();
        assert_eq!(a.to_string(), "1,3/2,1/4");
        assert!(!a.is_integral());
        assert!(Activation::parse("1,0").is_err());
        assert!(Activation::parse("1,-2").is_err());
        assert!(Activation::parse("1/0").is_err());
        assert!(Activation::parse("x").is_err());
        assert!(Activation::parse("1.").is_err());
    }

    #[test]
    fn clears_denominators() {
        let a = Activation::parse("1/2,2/3,3").unwrap();
        let (b, scale) = a.clear_denominators();
        assert_eq!(scale, BigUint::from(6u32));
        assert_eq!(b.integer_weights().unwrap(), vec![3, 4, 18]);
        assert!(a.integer_weights().is_err());
    }

    #[test]
    fn weight_is_a_product() {
        let a = Activation::parse("2,1/3").unwrap();
        assert_eq!(a.weight(&[3, 2]), BigRational::new(8.into(), 9.into()));
        assert!(Activation::ones(4).is_constant_one());
    }
}
