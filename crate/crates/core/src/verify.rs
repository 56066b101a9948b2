//! Machine checks of the identities satisfied by daisy cubes, each producing
//! a [`CheckReport`] with a counterexample witness on failure.
//!
//! Polynomial identities are compared coefficientwise. Censuses used as
//! evidence come from the BFS oracle, so a check never trusts the daisy fast
//! path it could be used to validate.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitword::{Subsets, Word};
use crate::census::{
    bfs_distances, census_daisy_fast, census_external_subcube, census_oracle, closed_form_w,
    cube_polynomial, ClosedForm, CubeComplex,
};
use crate::error::Result;
use crate::family::{
    cartesian_product, downward_closure, fibonacci, hypercube, interval, lucas,
    recenter, vertex_deleted, DaisyCube, GeneratorSet, NamedFamily, VertexSet,
};
use crate::gf::{expand, rational_form, substitution_mismatches, SeriesFamily, SeriesKind};
use crate::poly::{BiPoly, UniPoly};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// What a check was run on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Instance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Instance {
    pub fn family(name: impl Into<String>, n: usize) -> Self {
        Instance { family: Some(name.into()), n, ..Default::default() }
    }

    pub fn with_anchor(mut self, u: &Word) -> Self {
        self.anchor = Some(u.to_string());
        self
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(fam) = &self.family {
            parts.push(format!("family={fam}"));
        }
        parts.push(format!("n={}", self.n));
        if let Some(g) = &self.generators {
            parts.push(format!("generators={}", g.join(",")));
        }
        if let Some(a) = &self.anchor {
            parts.push(format!("anchor={a}"));
        }
        if let Some(s) = self.seed {
            parts.push(format!("seed={s}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// Counterexample attached to a failing report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Two vertices whose distance in the graph differs from their Hamming
    /// distance; `graph_distance` is `None` when they are disconnected.
    VertexPair { u: String, v: String, graph_distance: Option<u32>, hamming: u32 },
    /// Two sides of a polynomial identity that differ.
    PolyDiff {
        #[serde(skip_serializing_if = "Option::is_none")]
        anchor: Option<String>,
        lhs: String,
        rhs: String,
    },
    /// A census cell on which two computations disagree.
    CensusCell { anchor: String, k: u32, d: u32, left: u64, right: u64 },
    /// `|A ∩ B| · 2^n < |A| · |B|`.
    Kleitman { intersection: usize, left: usize, right: usize, n: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::VertexPair { u, v, graph_distance, hamming } => {
                let gd = graph_distance.map_or("inf".to_string(), |d| d.to_string());
                write!(f, "u={u} v={v} graph-distance={gd} hamming={hamming}")
            }
            Witness::PolyDiff { anchor, lhs, rhs } => {
                if let Some(a) = anchor {
                    write!(f, "anchor={a} ")?;
                }
                write!(f, "lhs=[{lhs}] rhs=[{rhs}]")
            }
            Witness::CensusCell { anchor, k, d, left, right } => {
                write!(f, "anchor={anchor} k={k} d={d} left={left} right={right}")
            }
            Witness::Kleitman { intersection, left, right, n } => {
                write!(f, "|X∩Y|={intersection} |X|={left} |Y|={right} n={n}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub instance: Instance,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    fn new(check: &str, instance: Instance, witness: Option<Witness>) -> Self {
        let verdict = if witness.is_some() { Verdict::Fail } else { Verdict::Pass };
        CheckReport { check: check.into(), instance, verdict, witness, note: None }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        write!(f, "{verdict} {} [{}]", self.check, self.instance)?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// A daisy cube together with a description of where it came from.
#[derive(Clone, Debug)]
pub struct Subject {
    pub instance: Instance,
    pub cube: DaisyCube,
}

impl Subject {
    pub fn named(family: NamedFamily, n: usize) -> Result<Self> {
        Ok(Subject { instance: Instance::family(family.to_string(), n), cube: family.build(n)? })
    }

    pub fn from_generators(label: impl Into<String>, x: &GeneratorSet, seed: Option<u64>) -> Self {
        let instance = Instance {
            family: Some(label.into()),
            n: x.n(),
            generators: Some(x.words().iter().map(|w| w.to_string()).collect()),
            anchor: None,
            seed,
        };
        Subject { instance, cube: downward_closure(x) }
    }

    pub fn new(instance: Instance, cube: DaisyCube) -> Self {
        Subject { instance, cube }
    }

    fn zero(&self) -> Word {
        self.cube.zero()
    }
}

fn poly_diff<T: PartialEq + fmt::Display>(anchor: Option<&Word>, lhs: &T, rhs: &T) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::PolyDiff {
        anchor: anchor.map(Word::to_string),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Partial cube test: BFS distance equals Hamming distance for every pair.
/// The witness is the first violating pair in canonical order.
pub fn check_partial_cube(instance: Instance, v: &VertexSet) -> CheckReport {
    let witness = v.iter().find_map(|u| {
        let dist = bfs_distances(v, &u).expect("u is a member");
        v.iter().find_map(|w| {
            let hamming = u.hamming(&w).expect("equal lengths");
            let graph_distance = dist.get(&w);
            (graph_distance != Some(hamming)).then(|| Witness::VertexPair {
                u: u.to_string(),
                v: w.to_string(),
                graph_distance,
                hamming,
            })
        })
    });
    CheckReport::new("partial-cube", instance, witness)
}

/// `D_{G,0^n}(x, y) = C_G(x + y - 1)`, with `D` from the oracle at `0^n` and
/// `C` from a distance-blind enumeration.
pub fn check_d_from_c(s: &Subject) -> CheckReport {
    let zero = s.zero();
    let d = census_oracle(s.cube.vertices(), &zero).expect("0^n is a vertex").distance_poly();
    let c = cube_polynomial(s.cube.vertices());
    let witness = poly_diff(Some(&zero), &d, &c.substitute_shift(-1));
    CheckReport::new("d-from-c", s.instance.clone().with_anchor(&zero), witness)
}

/// `D_{G,0^n}(x, y) = D_{G,0^n}(y, x)`.
pub fn check_symmetry(s: &Subject) -> CheckReport {
    let zero = s.zero();
    let d = census_oracle(s.cube.vertices(), &zero).expect("0^n is a vertex").distance_poly();
    let witness = poly_diff(Some(&zero), &d, &d.swap_vars());
    CheckReport::new("symmetry", s.instance.clone().with_anchor(&zero), witness)
}

/// Symmetry of `D_{G,u}` at an arbitrary vertex. Only `u = 0^n` is covered
/// by the symmetry identity, so this always passes and records the outcome
/// as a note.
pub fn symmetry_info(s: &Subject, u: &Word) -> Result<CheckReport> {
    let d = census_oracle(s.cube.vertices(), u)?.distance_poly();
    let note = if d == d.swap_vars() { "symmetric: yes" } else { "symmetric: no" };
    Ok(CheckReport::new("symmetry-info", s.instance.clone().with_anchor(u), None).with_note(note))
}

/// `D_{G,0^n} = W_{G,0^n}(x + y)` and `C_G = W_{G,0^n}(x + 1)`.
pub fn check_w_relations(s: &Subject) -> CheckReport {
    let zero = s.zero();
    let census = census_oracle(s.cube.vertices(), &zero).expect("0^n is a vertex");
    let w = census.weight_poly();
    let c = cube_polynomial(s.cube.vertices());
    let witness = poly_diff(Some(&zero), &census.distance_poly(), &w.substitute_sum())
        .or_else(|| poly_diff(Some(&zero), &c, &w.substitute_univariate_shift()));
    CheckReport::new("w-relations", s.instance.clone().with_anchor(&zero), witness)
}

/// Oracle `W_{G,0^n}` against the binomial closed form.
pub fn check_closed_form_w(family: ClosedForm, n: usize) -> Result<CheckReport> {
    let (name, cube) = match family {
        ClosedForm::Fibonacci => ("fibonacci", fibonacci(n)?),
        ClosedForm::Lucas => ("lucas", lucas(n)?),
        ClosedForm::Hypercube => ("hypercube", hypercube(n)?),
    };
    let zero = cube.zero();
    let w = census_oracle(cube.vertices(), &zero)?.weight_poly();
    let witness = poly_diff(Some(&zero), &w, &closed_form_w(family, n));
    Ok(CheckReport::new("closed-form-w", Instance::family(name, n), witness))
}

/// `D_{G,u}(x, -x) = 1` at every vertex `u`.
pub fn check_tree_like(s: &Subject) -> CheckReport {
    let complex = CubeComplex::new(s.cube.vertices());
    let witness = s.cube.vertices().iter().find_map(|u| {
        let value = complex.census(&u).expect("u is a vertex").distance_poly().substitute_neg();
        poly_diff(Some(&u), &value, &UniPoly::one())
    });
    CheckReport::new("tree-like", s.instance.clone(), witness)
}

/// `C_G(-1) = 1`.
pub fn check_cube_poly_minus1(s: &Subject) -> CheckReport {
    let c = cube_polynomial(s.cube.vertices());
    let value = c.evaluate(&(-1).into());
    let witness = (value != 1.into()).then(|| Witness::PolyDiff {
        anchor: None,
        lhs: format!("C(-1) = {value} where C = {c}"),
        rhs: "1".into(),
    });
    CheckReport::new("cube-poly-minus1", s.instance.clone(), witness)
}

/// `D_{G□H,(g,h)} = D_{G,g} · D_{H,h}`.
pub fn check_product(gs: &Subject, hs: &Subject, g: &Word, h: &Word) -> Result<CheckReport> {
    let dg = census_oracle(gs.cube.vertices(), g)?.distance_poly();
    let dh = census_oracle(hs.cube.vertices(), h)?.distance_poly();
    let product = cartesian_product(&gs.cube, &hs.cube)?;
    let anchor = g.concat(h)?;
    let d = census_oracle(product.vertices(), &anchor)?.distance_poly();
    let instance = Instance {
        family: Some(format!(
            "{} x {}",
            gs.instance.family.as_deref().unwrap_or("?"),
            hs.instance.family.as_deref().unwrap_or("?")
        )),
        n: product.n(),
        anchor: Some(anchor.to_string()),
        ..Default::default()
    };
    Ok(CheckReport::new("product", instance, poly_diff(Some(&anchor), &d, &(&dg * &dh))))
}

/// For `G = <I(0^n, b)>` and any word `u`, `D_{G,u}(x, -x) = (-x)^{d(u,G)}`
/// with `d(u, G) = weight(u AND NOT b)`.
pub fn check_subcube_anchor(b: &Word, u: &Word) -> Result<CheckReport> {
    let n = b.len();
    let census = census_external_subcube(b, u)?;
    let outside = (u.bits() & !b.bits()).count_ones();
    // Independent distance to G: minimum Hamming distance over its vertices.
    let brute = interval(&Word::zeros(n)?, b)?
        .iter()
        .map(|v| v.hamming(u).expect("equal lengths"))
        .min()
        .expect("interval is nonempty");
    let expected = UniPoly::monomial(if outside % 2 == 0 { 1 } else { -1 }, outside);
    let instance = Instance {
        family: Some(format!("subcube top={b}")),
        n,
        anchor: Some(u.to_string()),
        ..Default::default()
    };
    let witness = if brute != outside {
        Some(Witness::PolyDiff {
            anchor: Some(u.to_string()),
            lhs: format!("d(u,G) = {brute}"),
            rhs: format!("weight(u AND NOT b) = {outside}"),
        })
    } else {
        poly_diff(Some(u), &census.distance_poly().substitute_neg(), &expected)
    };
    Ok(CheckReport::new("subcube-anchor", instance, witness))
}

/// `|V(Q_n(X)) ∩ V(Q_n(Y))| · 2^n >= |V(Q_n(X))| · |V(Q_n(Y))|`.
pub fn check_kleitman(x: &GeneratorSet, y: &GeneratorSet, seed: Option<u64>) -> Result<CheckReport> {
    let n = x.n();
    let a = downward_closure(x);
    let b = downward_closure(y);
    let common = a.vertices().intersection_len(b.vertices())?;
    let lhs = common as u128 * (1u128 << n);
    let rhs = a.vertices().len() as u128 * b.vertices().len() as u128;
    let witness = (lhs < rhs).then_some(Witness::Kleitman {
        intersection: common,
        left: a.vertices().len(),
        right: b.vertices().len(),
        n,
    });
    let mut generators: Vec<String> = x.words().iter().map(|w| w.to_string()).collect();
    generators.push("|".into());
    generators.extend(y.words().iter().map(|w| w.to_string()));
    let instance = Instance { family: Some("hereditary pair".into()), n, generators: Some(generators), anchor: None, seed };
    Ok(CheckReport::new("kleitman", instance, witness))
}

/// `census_daisy_fast = census_oracle` at every vertex.
pub fn check_engine_equivalence(s: &Subject) -> CheckReport {
    let complex = CubeComplex::new(s.cube.vertices());
    let witness = s.cube.vertices().iter().find_map(|u| {
        let oracle = complex.census(&u).expect("u is a vertex");
        let fast = census_daisy_fast(&s.cube, &u).expect("u is a vertex");
        oracle.first_difference(&fast).map(|(k, d, left, right)| Witness::CensusCell {
            anchor: u.to_string(),
            k,
            d,
            left,
            right,
        })
    });
    CheckReport::new("engines", s.instance.clone(), witness)
}

/// Recentering `V` at `u` relabels anchors: the census of `V ⊕ u` at `v ⊕ u`
/// equals the census of `V` at `v`, for every vertex `v`.
pub fn check_recenter(instance: Instance, v: &VertexSet, u: &Word) -> Result<CheckReport> {
    let moved = recenter(v, u)?;
    let here = CubeComplex::new(v);
    let there = CubeComplex::new(&moved);
    let mut witness = None;
    for a in v.iter() {
        let b = a.xor(u)?;
        let p = here.census(&a)?.distance_poly();
        let q = there.census(&b)?.distance_poly();
        if let Some(w) = poly_diff(Some(&a), &p, &q) {
            witness = Some(w);
            break;
        }
    }
    Ok(CheckReport::new("recenter", instance.with_anchor(u), witness))
}

/// `C_{Q_n} = (2 + x)^n` and, via the fast path, `D_{Q_n,u} = (1 + x + y)^n`
/// at every vertex.
pub fn check_hypercube_closed_forms(n: usize) -> Result<CheckReport> {
    let q = hypercube(n)?;
    let c = cube_polynomial(q.vertices());
    let expected_c = UniPoly::from_coeffs(&[2, 1]).pow(n as u32);
    let one_x_y = &(&BiPoly::one() + &BiPoly::x()) + &BiPoly::y();
    let expected_d = one_x_y.pow(n as u32);
    let witness = poly_diff(None, &c, &expected_c).or_else(|| {
        q.vertices().iter().find_map(|u| {
            let d = census_daisy_fast(&q, &u).expect("u is a vertex").distance_poly();
            poly_diff(Some(&u), &d, &expected_d)
        })
    });
    Ok(CheckReport::new("hypercube-closed-forms", Instance::family("hypercube", n), witness))
}

/// Series coefficients of the printed `f`, `g`, `h` agree with each other
/// under `g = f(x+1, z)`, `h = f(x+y, z)` and, for `n <= census_max_n`, with
/// oracle censuses of the family members.
pub fn check_series(family: SeriesFamily, m: usize, census_max_n: usize) -> Result<CheckReport> {
    let rows = expand(family, m);
    let mut witness = substitution_mismatches(&rows).first().map(|&n| Witness::PolyDiff {
        anchor: None,
        lhs: format!("z^{n} coefficients of g/h"),
        rhs: "f shifted".into(),
    });
    if witness.is_none() {
        for kind in [SeriesKind::G, SeriesKind::H] {
            if let (Some(printed), Some(derived)) =
                (rational_form(family, kind), crate::gf::substituted_rational_form(family, kind))
            {
                let (p, d) = (printed.coefficients(m), derived.coefficients(m));
                if let Some(i) = (0..=m).find(|&i| p[i] != d[i]) {
                    witness = poly_diff(None, &p[i], &d[i]);
                    break;
                }
            }
        }
    }
    if witness.is_none() {
        for row in rows.iter().filter(|r| r.n <= census_max_n) {
            let cube = match family {
                SeriesFamily::Hypercube if row.n == 0 => fibonacci(0)?,
                SeriesFamily::Hypercube => hypercube(row.n)?,
                SeriesFamily::Lucas => lucas(row.n)?,
                SeriesFamily::Fibonacci => fibonacci(row.n)?,
            };
            let zero = cube.zero();
            let census = census_oracle(cube.vertices(), &zero)?;
            witness = poly_diff(Some(&zero), &census.weight_poly(), &row.f)
                .or_else(|| poly_diff(Some(&zero), &census.cube_poly(), &row.g))
                .or_else(|| poly_diff(Some(&zero), &census.distance_poly(), &row.h));
            if witness.is_some() {
                break;
            }
        }
    }
    let instance = Instance { family: Some(family.to_string()), n: m, ..Default::default() };
    Ok(CheckReport::new("series", instance, witness).with_note(format!("z^0..z^{m}")))
}

/// Parses a polynomial written as `(k, d, coefficient)` triples.
fn bi(terms: &[(u32, u32, i64)]) -> BiPoly {
    BiPoly::from_terms(terms)
}

/// The polynomials of `Q_3^-` at the representatives `000`, `100`, `110` of
/// its vertex orbits, and its cube polynomial.
pub fn q3_minus_reference() -> Vec<(String, Word, UniPoly, BiPoly)> {
    let w = |s: &str| s.parse::<Word>().expect("valid word");
    vec![
        (
            "000".into(),
            w("000"),
            UniPoly::from_coeffs(&[1, 3, 3]),
            bi(&[(0, 0, 1), (0, 1, 3), (0, 2, 3), (1, 0, 3), (1, 1, 6), (2, 0, 3)]),
        ),
        (
            "100".into(),
            w("100"),
            UniPoly::from_coeffs(&[1, 3, 2, 1]),
            // 1+3y+2y^2+y^3+x(3+4y+2y^2)+x^2(2+y)
            bi(&[(0, 0, 1), (0, 1, 3), (0, 2, 2), (0, 3, 1), (1, 0, 3), (1, 1, 4), (1, 2, 2), (2, 0, 2), (2, 1, 1)]),
        ),
        (
            "110".into(),
            w("110"),
            UniPoly::from_coeffs(&[1, 2, 3, 1]),
            // 1+2y+3y^2+y^3+x(2+4y+3y^2)+x^2(1+2y)
            bi(&[(0, 0, 1), (0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 0, 2), (1, 1, 4), (1, 2, 3), (2, 0, 1), (2, 1, 2)]),
        ),
    ]
}

/// Oracle reproduction of the `Q_3^-` reference polynomials.
pub fn check_q3_minus() -> Result<CheckReport> {
    let g = vertex_deleted(3)?;
    let mut witness = poly_diff(None, &cube_polynomial(g.vertices()), &UniPoly::from_coeffs(&[7, 9, 3]));
    for (_, u, w, d) in q3_minus_reference() {
        if witness.is_some() {
            break;
        }
        let census = census_oracle(g.vertices(), &u)?;
        witness = poly_diff(Some(&u), &census.weight_poly(), &w)
            .or_else(|| poly_diff(Some(&u), &census.distance_poly(), &d));
    }
    Ok(CheckReport::new("q3-minus-values", Instance::family("vertex-deleted", 3), witness))
}

/// Wraps a check that is expected to fail: passes iff the inner check
/// failed and its witness matches `expected`.
fn negative_control(inner: CheckReport, expected: Option<&Witness>) -> CheckReport {
    let ok = !inner.passed() && expected.is_none_or(|e| inner.witness.as_ref() == Some(e));
    let note = match &inner.witness {
        Some(w) => format!("expected failure observed: {w}"),
        None => "expected failure not observed".into(),
    };
    let mut report = CheckReport {
        check: format!("negative-control:{}", inner.check),
        instance: inner.instance,
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        witness: None,
        note: Some(note),
    };
    if !ok {
        report.witness = inner.witness.or(Some(Witness::PolyDiff {
            anchor: None,
            lhs: "check passed".into(),
            rhs: "failure expected".into(),
        }));
    }
    report
}

/// The 5-vertex path `000-100-110-111-011`, induced in `Q_3` but not
/// isometric: `000` and `011` are 4 apart in the path, 2 apart in `Q_3`.
pub fn non_isometric_path() -> VertexSet {
    let words = ["000", "100", "110", "111", "011"].map(|s| s.parse::<Word>().expect("valid"));
    VertexSet::new(3, words).expect("equal lengths")
}

pub fn negative_controls() -> Result<Vec<CheckReport>> {
    let path = check_partial_cube(Instance::family("non-isometric path", 3), &non_isometric_path());
    let expected = Witness::VertexPair { u: "000".into(), v: "011".into(), graph_distance: Some(4), hamming: 2 };
    let mut out = vec![negative_control(path, Some(&expected))];
    // D_{Q_3^-,u} is not symmetric at 100 and 110.
    let q3m = Subject::named(NamedFamily::VertexDeleted, 3)?;
    for anchor in ["100", "110"] {
        let u: Word = anchor.parse()?;
        let d = census_oracle(q3m.cube.vertices(), &u)?.distance_poly();
        let inner = CheckReport::new(
            "symmetry",
            q3m.instance.clone().with_anchor(&u),
            poly_diff(Some(&u), &d, &d.swap_vars()),
        );
        out.push(negative_control(inner, None));
    }
    Ok(out)
}

/// Scope of [`run_suite`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Largest `n` for the named families.
    pub max_n: usize,
    /// Largest `n` for random generator sets.
    pub random_max_n: usize,
    /// Number of random generator sets.
    pub random_count: usize,
    /// Largest number of generators in a random set.
    pub random_max_generators: usize,
    /// Number of random hereditary pairs for the Kleitman inequality.
    pub kleitman_pairs: usize,
    /// Word length of the Kleitman pairs.
    pub kleitman_n: usize,
    /// Largest `n` on which the all-pairs partial cube test runs.
    pub partial_cube_max_n: usize,
    /// Largest exponent of `z` in the series checks.
    pub series_m: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 10,
            random_max_n: 8,
            random_count: 100,
            random_max_generators: 20,
            kleitman_pairs: 1000,
            kleitman_n: 8,
            partial_cube_max_n: 8,
            series_m: 10,
            seed: 0x000d_a157,
        }
    }
}

/// A random nonempty generator set of words of length `n`.
pub fn random_generators(rng: &mut impl Rng, n: usize, max_generators: usize) -> GeneratorSet {
    let m = rng.gen_range(1..=max_generators.max(1));
    let words = (0..m).map(|_| {
        let bits = rng.gen_range(0..=crate::bitword::low_mask(n));
        Word::from_bits(bits, n).expect("masked")
    });
    GeneratorSet::new(n, words).expect("equal lengths")
}

/// Named families for `n <= max_n` followed by seeded random daisy cubes.
pub fn daisy_matrix(cfg: &SuiteConfig) -> Result<Vec<Subject>> {
    let mut out = Vec::new();
    for family in [
        NamedFamily::Fibonacci,
        NamedFamily::Lucas,
        NamedFamily::VertexDeleted,
        NamedFamily::BipartiteWheel,
    ] {
        let start = if family == NamedFamily::BipartiteWheel { 3 } else { 1 };
        for n in start..=cfg.max_n {
            out.push(Subject::named(family, n)?);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in 0..cfg.random_count {
        let n = rng.gen_range(1..=cfg.random_max_n);
        let x = random_generators(&mut rng, n, cfg.random_max_generators);
        out.push(Subject::from_generators(format!("random#{i}"), &x, Some(cfg.seed)));
    }
    Ok(out)
}

fn small_factors() -> Result<Vec<Subject>> {
    Ok(vec![
        Subject::named(NamedFamily::Hypercube, 1)?,
        Subject::named(NamedFamily::Hypercube, 2)?,
        Subject::named(NamedFamily::Fibonacci, 2)?,
        Subject::named(NamedFamily::Fibonacci, 3)?,
        Subject::named(NamedFamily::Lucas, 3)?,
    ])
}

/// Product multiplicativity for all pairs of factors and all anchor pairs.
pub fn product_reports() -> Result<Vec<CheckReport>> {
    let factors = small_factors()?;
    let mut out = Vec::new();
    for g in &factors {
        for h in &factors {
            for a in g.cube.vertices().iter() {
                for b in h.cube.vertices().iter() {
                    out.push(check_product(g, h, &a, &b)?);
                }
            }
        }
    }
    Ok(out)
}

/// All pairs `(b, u)` of words of length `n`.
pub fn subcube_anchor_reports(n: usize) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for b in Subsets::new(crate::bitword::low_mask(n)) {
        for u in Subsets::new(crate::bitword::low_mask(n)) {
            out.push(check_subcube_anchor(&Word::from_bits(b, n)?, &Word::from_bits(u, n)?)?);
        }
    }
    Ok(out)
}

pub fn kleitman_reports(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x6b6c_6569);
    (0..cfg.kleitman_pairs)
        .map(|_| {
            let x = random_generators(&mut rng, cfg.kleitman_n, cfg.random_max_generators);
            let y = random_generators(&mut rng, cfg.kleitman_n, cfg.random_max_generators);
            check_kleitman(&x, &y, Some(cfg.seed))
        })
        .collect()
}

/// Every per-graph check on one daisy cube.
pub fn subject_reports(s: &Subject, cfg: &SuiteConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    if s.instance.n <= cfg.partial_cube_max_n {
        out.push(check_partial_cube(s.instance.clone(), s.cube.vertices()));
    }
    out.push(check_d_from_c(s));
    out.push(check_symmetry(s));
    out.push(check_w_relations(s));
    out.push(check_tree_like(s));
    out.push(check_cube_poly_minus1(s));
    out.push(check_engine_equivalence(s));
    out
}

/// The full verification matrix, in a fixed order independent of thread
/// scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut out = vec![check_q3_minus()?];
    out.extend(negative_controls()?);
    for n in 1..=cfg.max_n.min(crate::family::MAX_DENSE_LEN) {
        out.push(check_hypercube_closed_forms(n)?);
    }
    let subjects = daisy_matrix(cfg)?;
    let per_subject: Vec<Vec<CheckReport>> =
        subjects.par_iter().map(|s| subject_reports(s, cfg)).collect();
    out.extend(per_subject.into_iter().flatten());
    for n in 1..=cfg.max_n.max(1) {
        out.push(check_closed_form_w(ClosedForm::Fibonacci, n)?);
        out.push(check_closed_form_w(ClosedForm::Lucas, n)?);
    }
    for family in [SeriesFamily::Hypercube, SeriesFamily::Lucas, SeriesFamily::Fibonacci] {
        out.push(check_series(family, cfg.series_m, cfg.max_n)?);
    }
    out.extend(product_reports()?);
    out.extend(subcube_anchor_reports(3)?);
    out.extend(kleitman_reports(cfg)?);
    let q3m = Subject::named(NamedFamily::VertexDeleted, 3)?;
    for u in q3m.cube.vertices().iter() {
        out.push(check_recenter(q3m.instance.clone(), q3m.cube.vertices(), &u)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn partial_cube_examples() {
        for n in 1..=5 {
            let s = Subject::named(NamedFamily::Hypercube, n).unwrap();
            assert!(check_partial_cube(s.instance.clone(), s.cube.vertices()).passed());
        }
        let r = check_partial_cube(Instance::default(), &non_isometric_path());
        assert!(!r.passed());
        assert_eq!(
            r.witness,
            Some(Witness::VertexPair { u: "000".into(), v: "011".into(), graph_distance: Some(4), hamming: 2 })
        );
    }

    #[test]
    fn partial_cube_flags_disconnected_sets() {
        let v = VertexSet::new(2, [w("00"), w("11")]).unwrap();
        let r = check_partial_cube(Instance::default(), &v);
        assert!(matches!(r.witness, Some(Witness::VertexPair { graph_distance: None, .. })));
    }

    #[test]
    fn identity_checks_on_named_examples() {
        let q3m = Subject::named(NamedFamily::VertexDeleted, 3).unwrap();
        for r in subject_reports(&q3m, &SuiteConfig::default()) {
            assert!(r.passed(), "{r}");
        }
        let l5 = Subject::named(NamedFamily::Lucas, 5).unwrap();
        assert!(check_d_from_c(&l5).passed());
        assert!(check_symmetry(&Subject::named(NamedFamily::Fibonacci, 6).unwrap()).passed());
        assert!(check_tree_like(&Subject::named(NamedFamily::BipartiteWheel, 5).unwrap()).passed());
        let k1 = Subject::named(NamedFamily::Fibonacci, 0).unwrap();
        assert!(check_cube_poly_minus1(&k1).passed());
        assert!(check_symmetry(&k1).passed());
        assert!(check_cube_poly_minus1(&Subject::named(NamedFamily::Lucas, 6).unwrap()).passed());
    }

    #[test]
    fn non_daisy_graph_fails_cube_poly_minus1() {
        // Q_3 minus two antipodal vertices is a 6-cycle: C(-1) = 6 - 6 = 0.
        let v = VertexSet::new(3, ["001", "011", "010", "110", "100", "101"].map(w)).unwrap();
        let c = cube_polynomial(&v);
        assert_eq!(c.evaluate(&(-1).into()), 0.into());
    }

    #[test]
    fn symmetry_info_never_fails() {
        let q3m = Subject::named(NamedFamily::VertexDeleted, 3).unwrap();
        let r = symmetry_info(&q3m, &w("110")).unwrap();
        assert!(r.passed());
        assert_eq!(r.note.as_deref(), Some("symmetric: no"));
        let r = symmetry_info(&q3m, &w("000")).unwrap();
        assert_eq!(r.note.as_deref(), Some("symmetric: yes"));
    }

    #[test]
    fn negative_controls_pass() {
        for r in negative_controls().unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn product_examples() {
        let q1 = Subject::named(NamedFamily::Hypercube, 1).unwrap();
        assert!(check_product(&q1, &q1, &w("0"), &w("0")).unwrap().passed());
        let f2 = Subject::named(NamedFamily::Fibonacci, 2).unwrap();
        assert!(check_product(&f2, &f2, &w("00"), &w("10")).unwrap().passed());
        let k1 = Subject::named(NamedFamily::Fibonacci, 0).unwrap();
        let z0 = Word::zeros(0).unwrap();
        assert!(check_product(&f2, &k1, &w("01"), &z0).unwrap().passed());
        assert!(check_product(&f2, &q1, &w("11"), &w("0")).is_err());
    }

    #[test]
    fn subcube_anchor_examples() {
        assert!(check_subcube_anchor(&w("111"), &w("010")).unwrap().passed());
        assert!(check_subcube_anchor(&w("000"), &w("110")).unwrap().passed());
        assert!(check_subcube_anchor(&w("101"), &w("010")).unwrap().passed());
        for r in subcube_anchor_reports(4).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn kleitman_examples() {
        let x = GeneratorSet::new(4, [w("1100"), w("0011")]).unwrap();
        assert!(check_kleitman(&x, &x, None).unwrap().passed());
        let all = GeneratorSet::new(4, [w("1111")]).unwrap();
        assert!(check_kleitman(&all, &x, None).unwrap().passed());
        let cfg = SuiteConfig { kleitman_pairs: 50, ..Default::default() };
        assert!(kleitman_reports(&cfg).unwrap().iter().all(CheckReport::passed));
    }

    #[test]
    fn recenter_relabels_anchors() {
        let v = crate::family::fibonacci(4).unwrap();
        let r = check_recenter(Instance::family("fibonacci", 4), v.vertices(), &w("1010")).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn series_and_closed_forms() {
        for family in [SeriesFamily::Hypercube, SeriesFamily::Lucas, SeriesFamily::Fibonacci] {
            let r = check_series(family, 8, 8).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(check_closed_form_w(ClosedForm::Lucas, 9).unwrap().passed());
        assert!(check_hypercube_closed_forms(4).unwrap().passed());
    }

    #[test]
    fn q3_minus_values_reproduce() {
        let r = check_q3_minus().unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn failing_report_carries_a_checkable_witness() {
        // The D-from-C comparison on a non-daisy set fails.
        let v = non_isometric_path();
        let d = census_oracle(&v, &w("000")).unwrap().distance_poly();
        let c = cube_polynomial(&v);
        assert!(poly_diff(None, &d, &c.substitute_shift(-1)).is_some());
    }

    #[test]
    fn reports_render_as_text_and_json() {
        let r = check_partial_cube(Instance::family("non-isometric path", 3), &non_isometric_path());
        assert_eq!(
            r.to_string(),
            "FAIL partial-cube [family=non-isometric path n=3] witness: u=000 v=011 graph-distance=4 hamming=2"
        );
        assert_eq!(
            r.to_json(),
            r#"{"check":"partial-cube","instance":{"family":"non-isometric path","n":3},"verdict":"fail","witness":{"kind":"vertex-pair","u":"000","v":"011","graph_distance":4,"hamming":2}}"#
        );
    }

    #[test]
    fn small_suite_is_deterministic_and_green() {
        let cfg = SuiteConfig {
            max_n: 5,
            random_max_n: 5,
            random_count: 10,
            kleitman_pairs: 20,
            series_m: 5,
            ..Default::default()
        };
        let a = run_suite(&cfg).unwrap();
        let b = run_suite(&cfg).unwrap();
        assert_eq!(a, b);
        let failures: Vec<String> = a.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
        assert!(failures.is_empty(), "{failures:#?}");
    }
}
