//! Vertex sets of induced subgraphs of `Q_n`, daisy cubes built from
//! generator sets, and the named families.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::bitword::{low_mask, Subsets, Word, MAX_LEN};
use crate::error::{Error, Result};

/// Largest word length for which a family enumerating all of `B^n` is built.
pub const MAX_DENSE_LEN: usize = 28;

/// A deduplicated set of equal-length words, sorted by numeric value.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    n: usize,
    members: Vec<u64>,
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = Word>>(n: usize, words: I) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::WordTooLong(n));
        }
        let mut members = Vec::new();
        for w in words {
            if w.len() != n {
                return Err(Error::LengthMismatch { left: n, right: w.len() });
            }
            members.push(w.bits());
        }
        Ok(Self::from_raw(n, members))
    }

    pub fn empty(n: usize) -> Self {
        VertexSet { n, members: Vec::new() }
    }

    pub(crate) fn from_raw(n: usize, mut members: Vec<u64>) -> Self {
        debug_assert!(members.iter().all(|&b| b & !low_mask(n) == 0));
        members.sort_unstable();
        members.dedup();
        VertexSet { n, members }
    }

    /// Word length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn raw(&self) -> &[u64] {
        &self.members
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Word> + '_ {
        let n = self.n;
        self.members.iter().map(move |&b| Word::from_bits_unchecked(b, n))
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.n && self.contains_bits(w.bits())
    }

    #[inline]
    pub fn contains_bits(&self, bits: u64) -> bool {
        self.members.binary_search(&bits).is_ok()
    }

    pub fn index_of(&self, bits: u64) -> Option<usize> {
        self.members.binary_search(&bits).ok()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.members.iter().all(|&v| {
            let mut rest = v;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if !self.contains_bits(v & !bit) {
                    return false;
                }
                rest &= rest - 1;
            }
            true
        })
    }

    /// Number of edges of the induced subgraph `<V>` in `Q_n`.
    pub fn edge_count(&self) -> usize {
        self.members
            .iter()
            .map(|&v| {
                let mut ones = v;
                let mut deg = 0;
                while ones != 0 {
                    let bit = ones & ones.wrapping_neg();
                    if self.contains_bits(v & !bit) {
                        deg += 1;
                    }
                    ones &= ones - 1;
                }
                deg
            })
            .sum()
    }

    pub fn intersection_len(&self, other: &VertexSet) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        Ok(small.members.iter().filter(|&&b| large.contains_bits(b)).count())
    }

    pub fn union(&self, other: &VertexSet) -> Result<VertexSet> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        let mut all = self.members.clone();
        all.extend_from_slice(&other.members);
        Ok(Self::from_raw(self.n, all))
    }
}

/// The set `X` whose downward closure defines `Q_n(X)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorSet(VertexSet);

impl GeneratorSet {
    pub fn new<I: IntoIterator<Item = Word>>(n: usize, words: I) -> Result<Self> {
        VertexSet::new(n, words).map(GeneratorSet)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn words(&self) -> &VertexSet {
        &self.0
    }
}

impl From<VertexSet> for GeneratorSet {
    fn from(set: VertexSet) -> Self {
        GeneratorSet(set)
    }
}

/// A downward-closed vertex set together with its maximal elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DaisyCube {
    vertices: VertexSet,
    maximal: VertexSet,
}

impl DaisyCube {
    /// Wraps a vertex set already known to be downward closed.
    fn from_downset(vertices: VertexSet) -> Self {
        debug_assert!(vertices.is_downward_closed());
        let n = vertices.n();
        let full = low_mask(n);
        let maximal: Vec<u64> = vertices
            .raw()
            .iter()
            .copied()
            .filter(|&v| {
                let mut zeros = !v & full;
                while zeros != 0 {
                    let bit = zeros & zeros.wrapping_neg();
                    if vertices.contains_bits(v | bit) {
                        return false;
                    }
                    zeros &= zeros - 1;
                }
                true
            })
            .collect();
        DaisyCube { maximal: VertexSet::from_raw(n, maximal), vertices }
    }

    /// Checks that `vertices` is downward closed and wraps it.
    pub fn try_from_vertices(vertices: VertexSet) -> Option<Self> {
        vertices.is_downward_closed().then(|| Self::from_downset(vertices))
    }

    pub fn n(&self) -> usize {
        self.vertices.n()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn maximal(&self) -> &VertexSet {
        &self.maximal
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.vertices.contains(w)
    }

    pub fn zero(&self) -> Word {
        Word::from_bits_unchecked(0, self.n())
    }
}

/// `Q_n(X)`: every word lying below some generator. An empty `X` gives an
/// empty daisy cube, which callers should treat as degenerate.
pub fn downward_closure(x: &GeneratorSet) -> DaisyCube {
    let n = x.n();
    let mut seen: HashSet<u64> = HashSet::with_capacity(x.words().len() * 4);
    let mut stack: Vec<u64> = Vec::new();
    for &g in x.words().raw() {
        if seen.insert(g) {
            stack.push(g);
        }
    }
    while let Some(w) = stack.pop() {
        let mut ones = w;
        while ones != 0 {
            let bit = ones & ones.wrapping_neg();
            let lower = w & !bit;
            if seen.insert(lower) {
                stack.push(lower);
            }
            ones &= ones - 1;
        }
    }
    let vertices = VertexSet::from_raw(n, seen.into_iter().collect());
    let maximal = maximal_antichain(x);
    DaisyCube { vertices, maximal: maximal.0 }
}

/// Elements of `X` not strictly below another element of `X`.
pub fn maximal_antichain(x: &GeneratorSet) -> GeneratorSet {
    let mut by_weight: Vec<u64> = x.words().raw().to_vec();
    by_weight.sort_by_key(|b| std::cmp::Reverse(b.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for b in by_weight {
        // Words are distinct, so `b <= k` here means strictly below.
        if !kept.iter().any(|&k| b & !k == 0) {
            kept.push(b);
        }
    }
    GeneratorSet(VertexSet::from_raw(x.n(), kept))
}

fn check_len(family: &str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::InvalidParameter {
            family: family.into(),
            reason: format!("n = {n} outside {min}..={max}"),
        });
    }
    Ok(())
}

/// Words of length `n` with no run of `k` consecutive 1s.
fn run_free_words(n: usize, k: usize) -> Vec<u64> {
    fn go(n: usize, k: usize, prefix: u64, depth: usize, run: usize, out: &mut Vec<u64>) {
        if depth == n {
            out.push(prefix);
            return;
        }
        go(n, k, prefix << 1, depth + 1, 0, out);
        if run + 1 < k {
            go(n, k, (prefix << 1) | 1, depth + 1, run + 1, out);
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, 0, 0, &mut out);
    out
}

/// `Q_n`.
pub fn hypercube(n: usize) -> Result<DaisyCube> {
    check_len("hypercube", n, 1, MAX_DENSE_LEN)?;
    Ok(DaisyCube::from_downset(VertexSet::from_raw(n, (0..1u64 << n).collect())))
}

/// Fibonacci cube `Γ_n`; `n = 0` gives `K_1`.
pub fn fibonacci(n: usize) -> Result<DaisyCube> {
    check_len("fibonacci", n, 0, MAX_LEN)?;
    Ok(DaisyCube::from_downset(VertexSet::from_raw(n, run_free_words(n, 2))))
}

/// Lucas cube `Λ_n`; `n = 0` gives `K_1`.
pub fn lucas(n: usize) -> Result<DaisyCube> {
    check_len("lucas", n, 0, MAX_LEN)?;
    let words = run_free_words(n, 2);
    let ends = if n == 0 { 0 } else { (1u64 << (n - 1)) | 1 };
    let lucas = words.into_iter().filter(|&b| n == 0 || b & ends != ends).collect();
    Ok(DaisyCube::from_downset(VertexSet::from_raw(n, lucas)))
}

/// `Q_n^-`: `Q_n` without the all-ones vertex.
pub fn vertex_deleted(n: usize) -> Result<DaisyCube> {
    check_len("vertex-deleted", n, 1, MAX_DENSE_LEN)?;
    let top = low_mask(n);
    Ok(DaisyCube::from_downset(VertexSet::from_raw(n, (0..top).collect())))
}

/// Generators `110^{n-2}, 0110^{n-3}, ..., 0^{n-2}11, 10^{n-1}1` of `BW_n`.
pub fn bipartite_wheel_generators(n: usize) -> Result<GeneratorSet> {
    check_len("bipartite-wheel", n, 3, MAX_LEN)?;
    let mut gens: Vec<u64> = (0..n - 1).map(|i| 0b11u64 << (n - 2 - i)).collect();
    gens.push((1u64 << (n - 1)) | 1);
    Ok(GeneratorSet(VertexSet::from_raw(n, gens)))
}

/// Bipartite wheel `BW_n` (gear graph), `n >= 3`.
pub fn bipartite_wheel(n: usize) -> Result<DaisyCube> {
    Ok(downward_closure(&bipartite_wheel_generators(n)?))
}

/// Words with no `k` consecutive 1s, `k >= 2`.
pub fn run_free(n: usize, k: usize) -> Result<DaisyCube> {
    check_len("run-free", n, 1, MAX_LEN)?;
    if k < 2 {
        return Err(Error::InvalidParameter {
            family: "run-free".into(),
            reason: format!("k = {k} must be at least 2"),
        });
    }
    Ok(DaisyCube::from_downset(VertexSet::from_raw(n, run_free_words(n, k))))
}

/// `G □ H`; coordinates of `G` come first.
pub fn cartesian_product(g: &DaisyCube, h: &DaisyCube) -> Result<DaisyCube> {
    let n = g.n() + h.n();
    if n > MAX_LEN {
        return Err(Error::WordTooLong(n));
    }
    let concat = |a: &VertexSet, b: &VertexSet| -> VertexSet {
        let shift = b.n();
        let raw = a
            .raw()
            .iter()
            .flat_map(|&x| b.raw().iter().map(move |&y| if shift == 64 { y } else { (x << shift) | y }))
            .collect();
        VertexSet::from_raw(n, raw)
    };
    Ok(DaisyCube {
        vertices: concat(g.vertices(), h.vertices()),
        maximal: concat(g.maximal(), h.maximal()),
    })
}

/// `{ v XOR u : v ∈ V }`, moving the center of the structure from `0^n` to `u`.
pub fn recenter(v: &VertexSet, u: &Word) -> Result<VertexSet> {
    if u.len() != v.n() {
        return Err(Error::LengthMismatch { left: v.n(), right: u.len() });
    }
    Ok(VertexSet::from_raw(v.n(), v.raw().iter().map(|&b| b ^ u.bits()).collect()))
}

/// The interval `I(u, v)` of `Q_n`: words agreeing with `u` and `v` wherever
/// they agree, and free elsewhere.
pub fn interval(u: &Word, v: &Word) -> Result<VertexSet> {
    let free = u.xor(v)?.bits();
    let fixed = u.bits() & !free;
    Ok(VertexSet::from_raw(u.len(), Subsets::new(free).map(|s| fixed | s).collect()))
}

/// A named family, as accepted on the command line.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    Hypercube,
    Fibonacci,
    Lucas,
    VertexDeleted,
    BipartiteWheel,
    RunFree { k: usize },
}

impl NamedFamily {
    pub fn build(&self, n: usize) -> Result<DaisyCube> {
        match *self {
            NamedFamily::Hypercube => hypercube(n),
            NamedFamily::Fibonacci => fibonacci(n),
            NamedFamily::Lucas => lucas(n),
            NamedFamily::VertexDeleted => vertex_deleted(n),
            NamedFamily::BipartiteWheel => bipartite_wheel(n),
            NamedFamily::RunFree { k } => run_free(n, k),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            NamedFamily::Hypercube => "hypercube",
            NamedFamily::Fibonacci => "fibonacci",
            NamedFamily::Lucas => "lucas",
            NamedFamily::VertexDeleted => "vertex-deleted",
            NamedFamily::BipartiteWheel => "bipartite-wheel",
            NamedFamily::RunFree { .. } => "run-free",
        }
    }

    /// Parses a family name; `run-free` takes its `k` from the argument.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        Ok(match name {
            "hypercube" => NamedFamily::Hypercube,
            "fibonacci" => NamedFamily::Fibonacci,
            "lucas" => NamedFamily::Lucas,
            "vertex-deleted" => NamedFamily::VertexDeleted,
            "bipartite-wheel" => NamedFamily::BipartiteWheel,
            "run-free" => NamedFamily::RunFree {
                k: k.ok_or_else(|| Error::InvalidParameter {
                    family: "run-free".into(),
                    reason: "missing k".into(),
                })?,
            },
            other => return Err(Error::UnknownFamily(other.into())),
        })
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFamily::RunFree { k } => write!(f, "run-free(k={k})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedFamily::parse(s, None)
    }
}
