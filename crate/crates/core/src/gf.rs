//! Generating functions over `n` for the hypercube, Lucas cube and Fibonacci
//! cube families.
//!
//! For a family of daisy cubes `{G_n}` write
//! `f(x, z) = Σ W_{G_n,0^n}(x) z^n`, `g(x, z) = Σ C_{G_n}(x) z^n` and
//! `h(x, y, z) = Σ D_{G_n,0^n}(x, y) z^n`. Then `g = f(x + 1, z)` and
//! `h = f(x + y, z)`. Rational forms are known for `{Q_n}` and `{Λ_n}`;
//! for `{Γ_n}` the per-`n` polynomials come from the closed form of `W`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::census::{closed_form_w, ClosedForm};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, RationalSeries, UniPoly};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SeriesFamily {
    Hypercube,
    Lucas,
    Fibonacci,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// Distance-weight polynomials at `0^n`.
    F,
    /// Cube polynomials.
    G,
    /// Distance cube polynomials at `0^n`.
    H,
}

impl FromStr for SeriesFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hypercube" => Ok(SeriesFamily::Hypercube),
            "lucas" => Ok(SeriesFamily::Lucas),
            "fibonacci" => Ok(SeriesFamily::Fibonacci),
            other => Err(Error::UnknownFamily(other.into())),
        }
    }
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesFamily::Hypercube => "hypercube",
            SeriesFamily::Lucas => "lucas",
            SeriesFamily::Fibonacci => "fibonacci",
        })
    }
}

/// The variable combination `s` plugged into `f(s, z)` for each kind.
fn argument(kind: SeriesKind) -> BiPoly {
    match kind {
        SeriesKind::F => BiPoly::x(),
        SeriesKind::G => &BiPoly::x() + &BiPoly::one(),
        SeriesKind::H => &BiPoly::x() + &BiPoly::y(),
    }
}

/// The printed rational generating function, or `None` for Fibonacci cubes.
pub fn rational_form(family: SeriesFamily, kind: SeriesKind) -> Option<RationalSeries> {
    let s = argument(kind);
    let one = BiPoly::one();
    let (num, den) = match family {
        // 1 / (1 - z(1 + s))
        SeriesFamily::Hypercube => (vec![one.clone()], vec![one.clone(), -(&one + &s)]),
        // (1 + s z^2) / (1 - z - s z^2)
        SeriesFamily::Lucas => (
            vec![one.clone(), BiPoly::zero(), s.clone()],
            vec![one, BiPoly::constant(-1), -s],
        ),
        SeriesFamily::Fibonacci => return None,
    };
    Some(RationalSeries::new(num, den).expect("unit constant term"))
}

/// One row of a series table: the coefficients of `z^n` in `f`, `g`, `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesRow {
    pub n: usize,
    pub f: UniPoly,
    pub g: UniPoly,
    pub h: BiPoly,
}

/// Coefficients of `z^0..z^m` of `f`, `g` and `h`.
pub fn expand(family: SeriesFamily, m: usize) -> Vec<SeriesRow> {
    match family {
        SeriesFamily::Fibonacci => (0..=m)
            .map(|n| {
                let f = closed_form_w(ClosedForm::Fibonacci, n);
                SeriesRow { n, g: f.substitute_univariate_shift(), h: f.substitute_sum(), f }
            })
            .collect(),
        _ => {
            let coeffs = |kind| rational_form(family, kind).expect("rational form").coefficients(m);
            let (f, g, h) = (coeffs(SeriesKind::F), coeffs(SeriesKind::G), coeffs(SeriesKind::H));
            f.into_iter()
                .zip(g)
                .zip(h)
                .enumerate()
                .map(|(n, ((f, g), h))| SeriesRow {
                    n,
                    f: f.to_uni().expect("f has no y"),
                    g: g.to_uni().expect("g has no y"),
                    h,
                })
                .collect()
        }
    }
}

/// Rows where `g_n != f_n(x + 1)` or `h_n != f_n(x + y)`.
pub fn substitution_mismatches(rows: &[SeriesRow]) -> Vec<usize> {
    rows.iter()
        .filter(|r| r.g != r.f.substitute_univariate_shift() || r.h != r.f.substitute_sum())
        .map(|r| r.n)
        .collect()
}

/// Expands `f` with `x` replaced by `x + 1` (resp. `x + y`) inside the
/// rational function, for comparison against the printed `g` (resp. `h`).
pub fn substituted_rational_form(family: SeriesFamily, kind: SeriesKind) -> Option<RationalSeries> {
    let f = rational_form(family, SeriesKind::F)?;
    let sub = |c: &BiPoly| {
        let c = c.to_uni().expect("f has no y");
        match kind {
            SeriesKind::F => c.to_bi(),
            SeriesKind::G => c.substitute_univariate_shift().to_bi(),
            SeriesKind::H => c.substitute_sum(),
        }
    };
    Some(f.map_coefficients(sub).expect("substitution keeps the unit constant term"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercube_coefficients() {
        let rows = expand(SeriesFamily::Hypercube, 3);
        assert_eq!(rows[3].g, UniPoly::from_coeffs(&[2, 1]).pow(3));
        assert_eq!(rows[3].f, UniPoly::from_coeffs(&[1, 1]).pow(3));
        let one_x_y = &(&BiPoly::one() + &BiPoly::x()) + &BiPoly::y();
        assert_eq!(rows[3].h, one_x_y.pow(3));
    }

    #[test]
    fn lucas_coefficients() {
        let rows = expand(SeriesFamily::Lucas, 4);
        let x_y = &BiPoly::x() + &BiPoly::y();
        assert_eq!(rows[2].h, &BiPoly::one() + &(&BiPoly::constant(2) * &x_y));
        assert_eq!(rows[0].f, UniPoly::one());
        assert_eq!(rows[4].f, UniPoly::from_coeffs(&[1, 4, 2]));
    }

    #[test]
    fn zeroth_coefficient_is_one() {
        for family in [SeriesFamily::Hypercube, SeriesFamily::Lucas, SeriesFamily::Fibonacci] {
            let rows = expand(family, 0);
            assert_eq!(rows.len(), 1);
            assert_eq!(rows[0].h, BiPoly::one());
        }
    }

    #[test]
    fn substitutions_are_consistent() {
        for family in [SeriesFamily::Hypercube, SeriesFamily::Lucas, SeriesFamily::Fibonacci] {
            assert!(substitution_mismatches(&expand(family, 12)).is_empty(), "{family}");
        }
        for family in [SeriesFamily::Hypercube, SeriesFamily::Lucas] {
            for kind in [SeriesKind::G, SeriesKind::H] {
                let printed = rational_form(family, kind).unwrap();
                let derived = substituted_rational_form(family, kind).unwrap();
                assert_eq!(printed.coefficients(10), derived.coefficients(10));
            }
        }
        assert!(rational_form(SeriesFamily::Fibonacci, SeriesKind::F).is_none());
    }
}
