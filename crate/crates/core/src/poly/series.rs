//! Rational generating functions `N(z) / Q(z)` whose `z`-coefficients are
//! polynomials in `x` and `y`, expanded exactly as power series in `z`.

use crate::error::{Error, Result};

use super::BiPoly;

/// `numerator[i]` and `denominator[i]` are the coefficients of `z^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Vec<BiPoly>,
    denominator: Vec<BiPoly>,
    // +1 or -1, the constant term of the denominator.
    unit: i64,
}

impl RationalSeries {
    /// The denominator's constant term must be the constant `1` or `-1`, so
    /// the expansion stays over the integers.
    pub fn new(numerator: Vec<BiPoly>, denominator: Vec<BiPoly>) -> Result<Self> {
        let unit = match denominator.first() {
            Some(c) if c.is_constant(1) => 1,
            Some(c) if c.is_constant(-1) => -1,
            _ => return Err(Error::NonUnitDenominator),
        };
        Ok(RationalSeries { numerator, denominator, unit })
    }

    pub fn numerator(&self) -> &[BiPoly] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BiPoly] {
        &self.denominator
    }

    /// Applies `f` to every `z`-coefficient of numerator and denominator,
    /// e.g. to substitute `x -> x + 1` inside the rational function.
    pub fn map_coefficients(&self, f: impl Fn(&BiPoly) -> BiPoly) -> Result<Self> {
        Self::new(
            self.numerator.iter().map(&f).collect(),
            self.denominator.iter().map(&f).collect(),
        )
    }

    /// Coefficients of `z^0, ..., z^m` of the expansion.
    pub fn coefficients(&self, m: usize) -> Vec<BiPoly> {
        let mut out: Vec<BiPoly> = Vec::with_capacity(m + 1);
        for n in 0..=m {
            let mut acc = self.numerator.get(n).cloned().unwrap_or_default();
            for i in 1..=n.min(self.denominator.len().saturating_sub(1)) {
                acc = &acc - &(&self.denominator[i] * &out[n - i]);
            }
            if self.unit == -1 {
                acc = -acc;
            }
            out.push(acc);
        }
        out
    }
}

pub fn series_coefficients(s: &RationalSeries, m: usize) -> Vec<BiPoly> {
    s.coefficients(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::UniPoly;

    fn one_x_y() -> BiPoly {
        &(&BiPoly::one() + &BiPoly::x()) + &BiPoly::y()
    }

    #[test]
    fn geometric_series() {
        // 1 / (1 - z(1+x+y))
        let s = RationalSeries::new(vec![BiPoly::one()], vec![BiPoly::one(), -one_x_y()]).unwrap();
        let c = s.coefficients(5);
        for (n, p) in c.iter().enumerate() {
            assert_eq!(p, &one_x_y().pow(n as u32));
        }
    }

    #[test]
    fn lucas_h_second_coefficient() {
        // (1 + (x+y) z^2) / (1 - z - (x+y) z^2)
        let s_ = &BiPoly::x() + &BiPoly::y();
        let s = RationalSeries::new(
            vec![BiPoly::one(), BiPoly::zero(), s_.clone()],
            vec![BiPoly::one(), BiPoly::constant(-1), -s_.clone()],
        )
        .unwrap();
        let c = s.coefficients(2);
        assert_eq!(c[0], BiPoly::one());
        assert_eq!(c[1], BiPoly::one());
        assert_eq!(c[2], &BiPoly::one() + &(&BiPoly::constant(2) * &s_));
    }

    #[test]
    fn zeroth_coefficient_is_numerator_constant() {
        let s = RationalSeries::new(
            vec![BiPoly::constant(3), BiPoly::x()],
            vec![BiPoly::one(), BiPoly::y()],
        )
        .unwrap();
        assert_eq!(s.coefficients(0), vec![BiPoly::constant(3)]);
    }

    #[test]
    fn negative_unit_denominator() {
        // 1 / (-1 + z) = -(1 + z + z^2 + ...)
        let s = RationalSeries::new(vec![BiPoly::one()], vec![BiPoly::constant(-1), BiPoly::one()]).unwrap();
        assert!(s.coefficients(4).iter().all(|p| p.is_constant(-1)));
    }

    #[test]
    fn non_unit_denominator_is_rejected() {
        let err = RationalSeries::new(vec![BiPoly::one()], vec![BiPoly::constant(2)]);
        assert_eq!(err, Err(Error::NonUnitDenominator));
        let err = RationalSeries::new(vec![BiPoly::one()], vec![BiPoly::x()]);
        assert_eq!(err, Err(Error::NonUnitDenominator));
        assert!(RationalSeries::new(vec![BiPoly::one()], vec![]).is_err());
    }

    #[test]
    fn product_of_expansion_and_denominator_is_numerator() {
        let s = RationalSeries::new(
            vec![BiPoly::one(), BiPoly::zero(), BiPoly::x()],
            vec![BiPoly::one(), BiPoly::constant(-1), -BiPoly::x()],
        )
        .unwrap();
        let m = 12;
        let a = s.coefficients(m);
        for n in 0..=m {
            let conv: BiPoly = (0..=n)
                .filter(|&i| i < s.denominator().len())
                .map(|i| &s.denominator()[i] * &a[n - i])
                .sum();
            assert_eq!(conv, s.numerator().get(n).cloned().unwrap_or_default());
        }
        let shifted = s
            .map_coefficients(|c| c.to_uni().unwrap().substitute_univariate_shift().to_bi())
            .unwrap();
        for (p, q) in shifted.coefficients(m).iter().zip(&a) {
            assert_eq!(p.to_uni().unwrap(), q.to_uni().unwrap().substitute_univariate_shift());
        }
        assert_eq!(a[0].to_uni(), Some(UniPoly::one()));
    }
}
