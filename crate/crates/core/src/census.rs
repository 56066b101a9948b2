//! Induced subcubes of an induced subgraph `<V>` of `Q_n`, counted by
//! dimension `k` and distance `d` from an anchor vertex.
//!
//! Two engines produce a [`CubeCensus`]:
//!
//! * [`census_oracle`] works for any vertex set. Cubes are found by
//!   exhaustive membership checks and distances come from a breadth-first
//!   search inside `<V>`.
//! * [`census_daisy_fast`] is only valid for downward-closed sets. Every
//!   vertex is the top of `2^weight` cubes, all present, and distances are
//!   Hamming distances computed with one popcount per cube.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitword::{Subsets, Word};
use crate::error::{Error, Result};
use crate::family::{DaisyCube, VertexSet};
use crate::poly::{binomial, BiPoly, UniPoly};

/// An induced subcube of `Q_n`: the words `base | s` for every `s <= mask`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeHandle {
    base: Word,
    mask: Word,
}

impl CubeHandle {
    pub fn new(base: Word, mask: Word) -> Result<Self> {
        if base.meet(&mask)?.bits() != 0 {
            return Err(Error::InvalidParameter {
                family: "cube".into(),
                reason: format!("base {base} overlaps mask {mask}"),
            });
        }
        Ok(CubeHandle { base, mask })
    }

    /// Minimum-weight vertex.
    pub fn base(&self) -> Word {
        self.base
    }

    pub fn mask(&self) -> Word {
        self.mask
    }

    /// Maximum-weight vertex.
    pub fn top(&self) -> Word {
        Word::from_bits_unchecked(self.base.bits() | self.mask.bits(), self.base.len())
    }

    pub fn dim(&self) -> u32 {
        self.mask.weight()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Word> + '_ {
        let n = self.base.len();
        Subsets::new(self.mask.bits()).map(move |s| Word::from_bits_unchecked(self.base.bits() | s, n))
    }
}

fn cube_present(v: &VertexSet, base: u64, mask: u64) -> bool {
    Subsets::new(mask).all(|s| v.contains_bits(base | s))
}

/// Every induced hypercube of `<V>`, vertices included, each exactly once.
///
/// Candidates are enumerated by top vertex and free-coordinate mask; each
/// candidate is kept only if all of its `2^k` words are members of `V`.
pub fn enumerate_cubes(v: &VertexSet) -> impl Iterator<Item = CubeHandle> + '_ {
    let n = v.n();
    v.raw().iter().flat_map(move |&top| {
        Subsets::new(top).filter_map(move |mask| {
            let base = top & !mask;
            cube_present(v, base, mask).then(|| CubeHandle {
                base: Word::from_bits_unchecked(base, n),
                mask: Word::from_bits_unchecked(mask, n),
            })
        })
    })
}

/// Distance-blind cube polynomial `C(x) = Σ_k c_k x^k` of `<V>`.
pub fn cube_polynomial(v: &VertexSet) -> UniPoly {
    let mut counts = vec![0u64; v.n() + 1];
    for cube in enumerate_cubes(v) {
        counts[cube.dim() as usize] += 1;
    }
    UniPoly::from_coeffs(&counts)
}

/// Geodesic distances inside `<V>` from an anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceIndex {
    anchor: Word,
    members: Vec<u64>,
    dist: Vec<Option<u32>>,
}

impl DistanceIndex {
    pub fn anchor(&self) -> Word {
        self.anchor
    }

    /// `None` for non-members and for members in another component.
    pub fn get(&self, w: &Word) -> Option<u32> {
        if w.len() != self.anchor.len() {
            return None;
        }
        self.get_bits(w.bits())
    }

    fn get_bits(&self, bits: u64) -> Option<u32> {
        let i = self.members.binary_search(&bits).ok()?;
        self.dist[i]
    }

    /// Reachable members with their distances, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Word, u32)> + '_ {
        let n = self.anchor.len();
        self.members
            .iter()
            .zip(&self.dist)
            .filter_map(move |(&b, d)| d.map(|d| (Word::from_bits_unchecked(b, n), d)))
    }

    /// `hist[d]` is the number of members at distance `d`.
    pub fn histogram(&self) -> Vec<u64> {
        let mut hist = Vec::new();
        for d in self.dist.iter().flatten() {
            let d = *d as usize;
            if hist.len() <= d {
                hist.resize(d + 1, 0);
            }
            hist[d] += 1;
        }
        hist
    }

    pub fn unreachable(&self) -> usize {
        self.dist.iter().filter(|d| d.is_none()).count()
    }
}

/// Breadth-first search in `<V>`; neighbours are single-bit flips that stay
/// inside `V`.
pub fn bfs_distances(v: &VertexSet, u: &Word) -> Result<DistanceIndex> {
    if u.len() != v.n() {
        return Err(Error::LengthMismatch { left: v.n(), right: u.len() });
    }
    let start = v.index_of(u.bits()).ok_or_else(|| Error::AnchorNotInGraph(u.to_string()))?;
    let members = v.raw();
    let mut dist = vec![None; members.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        let here = members[i];
        let next = dist[i].map(|d| d + 1);
        for bit in 0..v.n() {
            if let Some(j) = v.index_of(here ^ (1u64 << bit)) {
                if dist[j].is_none() {
                    dist[j] = next;
                    queue.push_back(j);
                }
            }
        }
    }
    Ok(DistanceIndex { anchor: *u, members: members.to_vec(), dist })
}

/// Counts `c_{k,d}` of induced `k`-cubes at distance `d` from the anchor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeCensus {
    #[serde(serialize_with = "serialize_word")]
    anchor: Word,
    #[serde(serialize_with = "serialize_counts")]
    counts: BTreeMap<(u32, u32), u64>,
    /// Cubes lying in a different connected component than the anchor, by
    /// dimension. Always empty for daisy cubes.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    unreachable: BTreeMap<u32, u64>,
}

fn serialize_word<S: serde::Serializer>(w: &Word, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(w)
}

fn serialize_counts<S: serde::Serializer>(
    counts: &BTreeMap<(u32, u32), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Cell {
        k: u32,
        d: u32,
        count: u64,
    }
    s.collect_seq(counts.iter().map(|(&(k, d), &count)| Cell { k, d, count }))
}

impl CubeCensus {
    pub fn new(anchor: Word) -> Self {
        CubeCensus { anchor, counts: BTreeMap::new(), unreachable: BTreeMap::new() }
    }

    fn from_dense(anchor: Word, dense: &[Vec<u64>]) -> Self {
        let mut c = Self::new(anchor);
        for (k, row) in dense.iter().enumerate() {
            for (d, &count) in row.iter().enumerate() {
                if count > 0 {
                    c.counts.insert((k as u32, d as u32), count);
                }
            }
        }
        c
    }

    pub fn anchor(&self) -> Word {
        self.anchor
    }

    pub fn add(&mut self, k: u32, d: u32, count: u64) {
        if count > 0 {
            *self.counts.entry((k, d)).or_default() += count;
        }
    }

    pub fn count(&self, k: u32, d: u32) -> u64 {
        self.counts.get(&(k, d)).copied().unwrap_or(0)
    }

    /// Nonzero cells `(k, d, count)` sorted by `(k, d)`.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.counts.iter().map(|(&(k, d), &c)| (k, d, c))
    }

    pub fn unreachable(&self) -> &BTreeMap<u32, u64> {
        &self.unreachable
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `c_k = Σ_d c_{k,d}`, plus any cubes unreachable from the anchor.
    pub fn cube_poly(&self) -> UniPoly {
        let mut p = UniPoly::zero();
        for (k, _, c) in self.cells() {
            p.add_term(k, BigInt::from(c));
        }
        for (&k, &c) in &self.unreachable {
            p.add_term(k, BigInt::from(c));
        }
        p
    }

    /// `D_{G,u}(x, y) = Σ c_{k,d} x^k y^d`.
    pub fn distance_poly(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        for (k, d, c) in self.cells() {
            p.add_term(k, d, BigInt::from(c));
        }
        p
    }

    /// `W_{G,u}(x) = Σ_d c_{0,d} x^d`.
    pub fn weight_poly(&self) -> UniPoly {
        let mut p = UniPoly::zero();
        for (_, d, c) in self.cells().filter(|&(k, _, _)| k == 0) {
            p.add_term(d, BigInt::from(c));
        }
        p
    }

    /// CSV with header `k,d,count`, rows sorted by `(k, d)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,d,count\n");
        for (k, d, c) in self.cells() {
            writeln!(out, "{k},{d},{c}").unwrap();
        }
        out
    }

    /// First cell where two censuses disagree, as `(k, d, self, other)`.
    pub fn first_difference(&self, other: &CubeCensus) -> Option<(u32, u32, u64, u64)> {
        let mut keys: Vec<(u32, u32)> = self.counts.keys().chain(other.counts.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|(k, d)| {
            let (a, b) = (self.count(k, d), other.count(k, d));
            (a != b).then_some((k, d, a, b))
        })
    }
}

/// The cubes of `<V>` with, for each cube of dimension >= 1, the two facets
/// obtained by fixing its lowest free coordinate. Built once and reused for
/// any number of anchors.
#[derive(Clone, Debug)]
pub struct CubeComplex {
    vertices: VertexSet,
    cubes: Vec<CubeHandle>,
    // For a 0-cube: (index into the vertex set, unused).
    // Otherwise: indices of the two facets in `cubes`.
    links: Vec<(usize, usize)>,
}

impl CubeComplex {
    pub fn new(v: &VertexSet) -> Self {
        let mut cubes: Vec<CubeHandle> = enumerate_cubes(v).collect();
        cubes.sort_by_key(|c| (c.dim(), c.base.bits(), c.mask.bits()));
        let index: HashMap<(u64, u64), usize> = cubes
            .iter()
            .enumerate()
            .map(|(i, c)| ((c.base.bits(), c.mask.bits()), i))
            .collect();
        let links = cubes
            .iter()
            .map(|c| {
                let (base, mask) = (c.base.bits(), c.mask.bits());
                if mask == 0 {
                    (v.index_of(base).expect("0-cube is a member"), 0)
                } else {
                    let low = mask & mask.wrapping_neg();
                    let rest = mask ^ low;
                    (index[&(base, rest)], index[&(base | low, rest)])
                }
            })
            .collect();
        CubeComplex { vertices: v.clone(), cubes, links }
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn cubes(&self) -> &[CubeHandle] {
        &self.cubes
    }

    /// Census at `u` with BFS distances inside `<V>`. The distance of a cube
    /// is the minimum over its vertices, evaluated facet by facet.
    pub fn census(&self, u: &Word) -> Result<CubeCensus> {
        let dist = bfs_distances(&self.vertices, u)?;
        let mut min_dist: Vec<Option<u32>> = Vec::with_capacity(self.cubes.len());
        let mut census = CubeCensus::new(*u);
        for (cube, &(a, b)) in self.cubes.iter().zip(&self.links) {
            let d = if cube.mask.bits() == 0 {
                dist.dist[a]
            } else {
                match (min_dist[a], min_dist[b]) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                }
            };
            min_dist.push(d);
            match d {
                Some(d) => census.add(cube.dim(), d, 1),
                None => *census.unreachable.entry(cube.dim()).or_default() += 1,
            }
        }
        Ok(census)
    }
}

/// Census of an arbitrary induced subgraph `<V>` of `Q_n` at `u`, using
/// geodesic distances inside `<V>`.
pub fn census_oracle(v: &VertexSet, u: &Word) -> Result<CubeCensus> {
    if !v.contains(u) {
        return Err(Error::AnchorNotInGraph(u.to_string()));
    }
    CubeComplex::new(v).census(u)
}

/// Census of a daisy cube at one of its vertices.
///
/// Every vertex `v` is the top of the cube with mask `S` for each `S <= v`,
/// and the cube's distance from `u` is `weight((u XOR base) AND NOT S)`
/// because daisy cubes are isometric in `Q_n`.
pub fn census_daisy_fast(g: &DaisyCube, u: &Word) -> Result<CubeCensus> {
    if u.len() != g.n() {
        return Err(Error::LengthMismatch { left: g.n(), right: u.len() });
    }
    if !g.contains(u) {
        return Err(Error::AnchorNotInGraph(u.to_string()));
    }
    Ok(hamming_census(g.vertices().raw(), g.n(), *u))
}

fn hamming_census(tops: &[u64], n: usize, anchor: Word) -> CubeCensus {
    let u = anchor.bits();
    let side = n + 1;
    let dense = tops
        .par_chunks(256)
        .fold(
            || vec![0u64; side * side],
            |mut acc, chunk| {
                for &top in chunk {
                    for mask in Subsets::new(top) {
                        let base = top & !mask;
                        let d = ((u ^ base) & !mask).count_ones() as usize;
                        acc[mask.count_ones() as usize * side + d] += 1;
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; side * side],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let rows: Vec<Vec<u64>> = dense.chunks(side).map(<[u64]>::to_vec).collect();
    CubeCensus::from_dense(anchor, &rows)
}

/// Census of the sub-hypercube `<I(0^n, top)>` from an arbitrary word `u`,
/// which need not be a vertex of it. Distances are measured in `Q_n`.
///
/// External anchors are supported only for sub-hypercubes; for other graphs
/// the notion of distance from an outside word is not fixed here.
pub fn census_external_subcube(top: &Word, u: &Word) -> Result<CubeCensus> {
    if top.len() != u.len() {
        return Err(Error::LengthMismatch { left: top.len(), right: u.len() });
    }
    let tops: Vec<u64> = Subsets::new(top.bits()).collect();
    Ok(hamming_census(&tops, top.len(), *u))
}

/// Which engine produced a census.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Oracle,
    Fast,
    Both,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Engine::Oracle),
            "fast" => Ok(Engine::Fast),
            "both" => Ok(Engine::Both),
            other => Err(Error::InvalidParameter {
                family: "engine".into(),
                reason: format!("unknown engine {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusRun {
    pub census: CubeCensus,
    pub engine: Engine,
    /// Set when both engines ran; `Some(false)` means they disagreed.
    pub agreed: Option<bool>,
    /// The oracle's census when it disagreed with the fast path.
    pub oracle_census: Option<CubeCensus>,
}

/// Runs the requested engine(s) on a daisy cube.
pub fn run_census(g: &DaisyCube, u: &Word, engine: Engine) -> Result<CensusRun> {
    match engine {
        Engine::Oracle => Ok(CensusRun {
            census: census_oracle(g.vertices(), u)?,
            engine,
            agreed: None,
            oracle_census: None,
        }),
        Engine::Fast => Ok(CensusRun {
            census: census_daisy_fast(g, u)?,
            engine,
            agreed: None,
            oracle_census: None,
        }),
        Engine::Both => {
            let fast = census_daisy_fast(g, u)?;
            let oracle = census_oracle(g.vertices(), u)?;
            let agreed = fast == oracle;
            Ok(CensusRun {
                census: fast,
                engine,
                agreed: Some(agreed),
                oracle_census: (!agreed).then_some(oracle),
            })
        }
    }
}

/// Families with a closed form for `W_{G,0^n}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    Fibonacci,
    Lucas,
    Hypercube,
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fibonacci" => Ok(ClosedForm::Fibonacci),
            "lucas" => Ok(ClosedForm::Lucas),
            "hypercube" => Ok(ClosedForm::Hypercube),
            other => Err(Error::UnknownFamily(other.into())),
        }
    }
}

/// `W_{G,0^n}` from its binomial closed form:
///
/// * Fibonacci: `Σ_k C(n-k+1, k) x^k`
/// * Lucas: `Σ_k [2 C(n-k, k) - C(n-k-1, k)] x^k`, with `Λ_0 = K_1`
/// * hypercube: `(1 + x)^n`
pub fn closed_form_w(family: ClosedForm, n: usize) -> UniPoly {
    let n = n as i64;
    match family {
        ClosedForm::Hypercube => UniPoly::from_coeffs(&[1, 1]).pow(n as u32),
        ClosedForm::Fibonacci => {
            let coeffs: Vec<BigInt> = (0..=(n + 1) / 2).map(|k| binomial(n - k + 1, k)).collect();
            UniPoly::from_coeffs(&coeffs)
        }
        ClosedForm::Lucas if n == 0 => UniPoly::one(),
        ClosedForm::Lucas => {
            let coeffs: Vec<BigInt> = (0..=n / 2)
                .map(|k| BigInt::from(2) * binomial(n - k, k) - binomial(n - k - 1, k))
                .collect();
            UniPoly::from_coeffs(&coeffs)
        }
    }
}
