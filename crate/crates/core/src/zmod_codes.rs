//! Vectors over `Z_l` and linear codes (additive subgroups of `Z_l^n`).
//!
//! Every computation here is an exact enumeration. Vectors are packed into a
//! mixed-radix integer with the first coordinate most significant, so numeric
//! order on packed words is lexicographic order on vectors. That keeps sorted
//! codeword lists canonical and cheap to compare.

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::arith::checked_pow;
use crate::error::{Error, Result};

/// Default limit on the number of candidate vectors an enumeration may touch.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Hard limit for [`all_linear_codes`]: the search only runs when `l^n` is at
/// most this.
pub const EXHAUSTIVE_LIMIT: u64 = 10_000;

static BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_BUDGET);

/// Current global enumeration budget.
pub fn enumeration_budget() -> u64 {
    BUDGET.load(Ordering::Relaxed)
}

/// Replaces the global enumeration budget.
pub fn set_enumeration_budget(budget: u64) {
    BUDGET.store(budget, Ordering::Relaxed);
}

fn check_budget(ell: u32, n: usize, budget: u64) -> Result<u64> {
    match checked_pow(ell as u64, n as u64) {
        Some(size) if size <= budget => Ok(size),
        _ => Err(Error::BudgetExceeded {
            needed: format!("{ell}^{n}"),
            budget,
        }),
    }
}

/// The residue ring `Z_l`, `l >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(ell: u32) -> Result<Self> {
        if ell < 2 {
            return Err(Error::InvalidModulus(ell as u64));
        }
        Ok(Modulus(ell))
    }

    pub fn ell(self) -> u32 {
        self.0
    }

    /// `floor(l/2)`, the largest Lee weight of a single residue.
    pub fn lee_max(self) -> u32 {
        self.0 / 2
    }

    /// `floor(l/2)^2`, the largest Euclidean weight of a single residue.
    pub fn euclidean_max(self) -> u64 {
        let w = self.lee_max() as u64;
        w * w
    }

    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(self.0 as i64) as u32
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.0)
    }
}

/// An element of `Z_l^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingVector {
    modulus: Modulus,
    entries: Vec<u32>,
}

impl RingVector {
    /// Builds a vector, rejecting entries outside `0..l`.
    pub fn new(modulus: Modulus, entries: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e >= modulus.ell()) {
            return Err(Error::ResidueOutOfRange {
                residue: bad as u64,
                modulus: modulus.ell(),
            });
        }
        Ok(RingVector { modulus, entries })
    }

    /// Builds a vector from arbitrary integers, reducing each mod `l`.
    pub fn from_residues(modulus: Modulus, values: &[i64]) -> Self {
        RingVector {
            modulus,
            entries: values.iter().map(|&v| modulus.reduce(v)).collect(),
        }
    }

    pub fn zero(modulus: Modulus, n: usize) -> Self {
        RingVector {
            modulus,
            entries: vec![0; n],
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Standard inner product `sum x_i y_i mod l`.
    pub fn dot(&self, other: &RingVector) -> u32 {
        let ell = self.modulus.ell() as u64;
        let sum = self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % ell);
        sum as u32
    }

    pub fn add(&self, other: &RingVector) -> RingVector {
        let ell = self.modulus.ell();
        RingVector {
            modulus: self.modulus,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + b) % ell)
                .collect(),
        }
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Mixed-radix packing of `Z_l^n` into `0..l^n`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Space {
    pub ell: u64,
    pub n: usize,
    pub size: u64,
}

impl Space {
    pub fn new(ell: u32, n: usize, budget: u64) -> Result<Self> {
        let size = check_budget(ell, n, budget)?;
        Ok(Space {
            ell: ell as u64,
            n,
            size,
        })
    }

    pub fn pack(&self, entries: &[u32]) -> u64 {
        entries
            .iter()
            .fold(0u64, |acc, &e| acc * self.ell + e as u64)
    }

    /// Writes the digits of `word` into `out` (first coordinate first).
    pub fn unpack_into(&self, mut word: u64, out: &mut [u32]) {
        for slot in out.iter_mut().rev() {
            *slot = (word % self.ell) as u32;
            word /= self.ell;
        }
    }

    pub fn unpack(&self, word: u64) -> Vec<u32> {
        let mut out = vec![0; self.n];
        self.unpack_into(word, &mut out);
        out
    }

    pub fn add(&self, mut a: u64, mut b: u64) -> u64 {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            let d = (a % self.ell + b % self.ell) % self.ell;
            out += d * place;
            place *= self.ell;
            a /= self.ell;
            b /= self.ell;
        }
        out
    }
}

/// A subgroup under construction: membership bitmap plus element list.
#[derive(Clone)]
struct Subgroup {
    member: Vec<bool>,
    words: Vec<u64>,
}

impl Subgroup {
    fn trivial(space: &Space) -> Self {
        let mut member = vec![false; space.size as usize];
        member[0] = true;
        Subgroup {
            member,
            words: vec![0],
        }
    }

    /// Replaces `S` with `S + <g>` by appending cosets `S + kg` until `kg`
    /// falls back into `S`.
    fn extend(&mut self, space: &Space, g: u64) {
        let base_len = self.words.len();
        let mut multiple = g;
        while !self.member[multiple as usize] {
            for i in 0..base_len {
                let w = space.add(self.words[i], multiple);
                self.member[w as usize] = true;
                self.words.push(w);
            }
            multiple = space.add(multiple, g);
        }
    }

    fn sorted_words(&self) -> Vec<u64> {
        let mut words = self.words.clone();
        words.sort_unstable();
        words
    }
}

/// A linear code over `Z_l`: the additive span of its generators.
///
/// Two codes are the same code when their codeword sets agree; compare with
/// [`LinearCode::same_code`]. The generator list is only a description.
#[derive(Debug, Clone)]
pub struct LinearCode {
    modulus: Modulus,
    length: usize,
    generators: Vec<RingVector>,
    words: OnceLock<Arc<Vec<u64>>>,
}

impl LinearCode {
    pub fn new(modulus: Modulus, length: usize, generators: Vec<RingVector>) -> Result<Self> {
        if length == 0 {
            return Err(Error::EmptyLength);
        }
        for g in &generators {
            if g.modulus != modulus {
                return Err(Error::ModulusMismatch {
                    expected: modulus.ell(),
                    found: g.modulus.ell(),
                });
            }
            if g.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: g.len(),
                });
            }
        }
        Ok(LinearCode {
            modulus,
            length,
            generators,
            words: OnceLock::new(),
        })
    }

    /// Shorthand for tests and examples: generators given as integer rows.
    pub fn from_rows(ell: u32, length: usize, rows: &[&[i64]]) -> Result<Self> {
        let modulus = Modulus::new(ell)?;
        let gens = rows
            .iter()
            .map(|r| {
                if r.len() != length {
                    return Err(Error::LengthMismatch {
                        expected: length,
                        found: r.len(),
                    });
                }
                Ok(RingVector::from_residues(modulus, r))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearCode::new(modulus, length, gens)
    }

    /// The zero code `{0}`.
    pub fn zero(modulus: Modulus, length: usize) -> Result<Self> {
        LinearCode::new(modulus, length, Vec::new())
    }

    /// The whole space `Z_l^n`.
    pub fn full(modulus: Modulus, length: usize) -> Result<Self> {
        let gens = (0..length)
            .map(|i| {
                let mut e = vec![0; length];
                e[i] = 1;
                RingVector { modulus, entries: e }
            })
            .collect();
        LinearCode::new(modulus, length, gens)
    }

    fn with_words(modulus: Modulus, length: usize, generators: Vec<RingVector>, words: Vec<u64>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(words));
        LinearCode {
            modulus,
            length,
            generators,
            words: cell,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generators(&self) -> &[RingVector] {
        &self.generators
    }

    pub(crate) fn space(&self) -> Result<Space> {
        Space::new(self.modulus.ell(), self.length, enumeration_budget())
    }

    /// Sorted packed codewords, computed once.
    pub(crate) fn packed_words(&self) -> Result<Arc<Vec<u64>>> {
        if let Some(words) = self.words.get() {
            return Ok(words.clone());
        }
        let space = self.space()?;
        let mut group = Subgroup::trivial(&space);
        for g in &self.generators {
            group.extend(&space, space.pack(&g.entries));
        }
        let words = Arc::new(group.sorted_words());
        Ok(self.words.get_or_init(|| words).clone())
    }

    /// All codewords in lexicographic order, zero vector first.
    pub fn codewords(&self) -> Result<Vec<RingVector>> {
        let space = self.space()?;
        Ok(self
            .packed_words()?
            .iter()
            .map(|&w| RingVector {
                modulus: self.modulus,
                entries: space.unpack(w),
            })
            .collect())
    }

    /// `|C|`.
    pub fn cardinality(&self) -> Result<u64> {
        Ok(self.packed_words()?.len() as u64)
    }

    pub fn contains(&self, v: &RingVector) -> Result<bool> {
        if v.modulus != self.modulus || v.len() != self.length {
            return Ok(false);
        }
        let space = self.space()?;
        Ok(self.packed_words()?.binary_search(&space.pack(&v.entries)).is_ok())
    }

    /// Set equality of codewords.
    pub fn same_code(&self, other: &LinearCode) -> Result<bool> {
        if self.modulus != other.modulus || self.length != other.length {
            return Ok(false);
        }
        Ok(self.packed_words()? == other.packed_words()?)
    }

    /// The dual code `{x : x . y = 0 mod l for every generator y}`.
    ///
    /// Brute force over `Z_l^n`; orthogonality to the generators implies
    /// orthogonality to their span. The result lists every codeword as a
    /// generator.
    pub fn dual(&self) -> Result<LinearCode> {
        let space = self.space()?;
        let ell = space.ell;
        let gens: Vec<&[u32]> = self.generators.iter().map(|g| g.entries()).collect();
        let words: Vec<u64> = (0..space.size)
            .into_par_iter()
            .map_init(
                || vec![0u32; space.n],
                |digits, x| {
                    space.unpack_into(x, digits);
                    let orthogonal = gens.iter().all(|g| {
                        digits
                            .iter()
                            .zip(g.iter())
                            .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % ell)
                            == 0
                    });
                    orthogonal.then_some(x)
                },
            )
            .flatten()
            .collect();
        let generators = words
            .iter()
            .map(|&w| RingVector {
                modulus: self.modulus,
                entries: space.unpack(w),
            })
            .collect();
        Ok(LinearCode::with_words(self.modulus, self.length, generators, words))
    }

    /// Renders the code in the line-oriented code-spec format.
    pub fn to_spec_text(&self) -> String {
        let mut out = format!("modulus {}\nlength {}\n", self.modulus.ell(), self.length);
        for g in &self.generators {
            out.push_str(&format!("gen {g}\n"));
        }
        out
    }

    /// Parses the code-spec format:
    ///
    /// ```text
    /// # comment
    /// modulus 6
    /// length 2
    /// gen 2 0
    /// gen 0 3
    /// ```
    ///
    /// Residues are reduced mod `l`.
    pub fn parse_spec(text: &str) -> Result<LinearCode> {
        let mut modulus = None;
        let mut length = None;
        let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap_or_default();
            let err = |msg: String| Error::Parse { line: line_no, msg };
            match key {
                "modulus" | "length" => {
                    let value: u64 = parts
                        .next()
                        .ok_or_else(|| err(format!("missing value for {key}")))?
                        .parse()
                        .map_err(|_| err(format!("bad value for {key}")))?;
                    if parts.next().is_some() {
                        return Err(err(format!("trailing tokens after {key}")));
                    }
                    if key == "modulus" {
                        let ell = u32::try_from(value).map_err(|_| err("modulus too large".into()))?;
                        modulus = Some(Modulus::new(ell)?);
                    } else {
                        length = Some(value as usize);
                    }
                }
                "gen" => {
                    let row = parts
                        .map(|t| t.parse::<i64>().map_err(|_| err(format!("bad residue {t:?}"))))
                        .collect::<Result<Vec<_>>>()?;
                    rows.push((line_no, row));
                }
                other => return Err(err(format!("unknown directive {other:?}"))),
            }
        }
        let modulus = modulus.ok_or(Error::Parse {
            line: 0,
            msg: "missing modulus line".into(),
        })?;
        let length = length.ok_or(Error::Parse {
            line: 0,
            msg: "missing length line".into(),
        })?;
        let mut gens = Vec::with_capacity(rows.len());
        for (line, row) in rows {
            if row.len() != length {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected {length} residues, found {}", row.len()),
                });
            }
            gens.push(RingVector::from_residues(modulus, &row));
        }
        LinearCode::new(modulus, length, gens)
    }
}

/// Every additive subgroup of `Z_l^n`, each exactly once, in canonical order
/// (lexicographic on sorted codeword lists).
///
/// Subgroups are reached by closing `{0}` under "add one more generator": each
/// known subgroup `C` is extended by one representative per coset of `C`.
/// Every finite subgroup is reachable this way, and duplicates are merged on
/// their sorted codeword lists.
pub fn all_linear_codes(modulus: Modulus, n: usize) -> Result<std::vec::IntoIter<LinearCode>> {
    if n == 0 {
        return Err(Error::EmptyLength);
    }
    let space = Space::new(modulus.ell(), n, EXHAUSTIVE_LIMIT.min(enumeration_budget()))?;

    let trivial = Subgroup::trivial(&space);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(trivial.sorted_words());
    let mut found: Vec<(Vec<u64>, Vec<u64>)> = vec![(trivial.sorted_words(), Vec::new())];
    let mut frontier: Vec<(Subgroup, Vec<u64>)> = vec![(trivial, Vec::new())];

    while !frontier.is_empty() {
        let candidates: Vec<(Subgroup, Vec<u64>, Vec<u64>)> = frontier
            .par_iter()
            .flat_map_iter(|(group, gens)| {
                let mut covered = group.member.clone();
                let mut out = Vec::new();
                let mut local: HashSet<Vec<u64>> = HashSet::new();
                for v in 0..space.size {
                    if covered[v as usize] {
                        continue;
                    }
                    for &w in &group.words {
                        covered[space.add(v, w) as usize] = true;
                    }
                    let mut bigger = group.clone();
                    bigger.extend(&space, v);
                    let key = bigger.sorted_words();
                    if local.insert(key.clone()) {
                        let mut next_gens = gens.clone();
                        next_gens.push(v);
                        out.push((bigger, next_gens, key));
                    }
                }
                out
            })
            .collect();

        let mut next = Vec::new();
        for (group, gens, key) in candidates {
            if seen.insert(key.clone()) {
                found.push((key, gens.clone()));
                next.push((group, gens));
            }
        }
        frontier = next;
    }

    found.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let codes: Vec<LinearCode> = found
        .into_iter()
        .map(|(words, gens)| {
            let generators = gens
                .iter()
                .map(|&g| RingVector {
                    modulus,
                    entries: space.unpack(g),
                })
                .collect();
            LinearCode::with_words(modulus, n, generators, words)
        })
        .collect();
    Ok(codes.into_iter())
}
