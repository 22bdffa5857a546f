//! Finite fields by lookup table, and Gray maps `Z_l -> F_m^floor(l/2)` that
//! send Lee weight to Hamming weight.

use std::collections::HashSet;
use std::fmt;

use crate::arith::prime_power_parts;
use crate::error::{Error, Result};
use crate::weight_enum::lee_weight;
use crate::zmod_codes::{LinearCode, Modulus, RingVector};

/// Largest field order [`make_field`] will tabulate.
pub const MAX_FIELD_ORDER: u64 = 256;

/// `GF(m)` as addition and multiplication tables over labels `0..m`.
///
/// For `m = p^k` the label of a field element `c_0 + c_1 X + ... + c_{k-1} X^{k-1}`
/// is `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. Prime fields are plain `Z_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    order: u32,
    characteristic: u32,
    /// Monic reducing polynomial, low coefficient first; `[0, 1]` for prime fields.
    reducing: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// Builds `GF(m)` for any prime power `m <= MAX_FIELD_ORDER`.
///
/// Extension fields reduce modulo the first monic irreducible polynomial of
/// degree `k` when the lower coefficients are read as a base-`p` number. This
/// yields `x^2+x+1` for GF(4), `x^3+x+1` for GF(8), `x^2+1` for GF(9) and
/// `x^4+x+1` for GF(16).
pub fn make_field(m: u64) -> Result<FieldSpec> {
    let (p, k) = prime_power_parts(m).ok_or(Error::NotPrimePower(m))?;
    if m > MAX_FIELD_ORDER {
        return Err(Error::NotPrimePower(m));
    }
    let (p, order) = (p as u32, m as u32);
    let reducing = if k == 1 {
        vec![0, 1]
    } else {
        first_irreducible(p, k as usize)
    };
    let k = reducing.len() - 1;

    let digits = |mut label: u32| -> Vec<u32> {
        let mut out = vec![0; k];
        for d in out.iter_mut() {
            *d = label % p;
            label /= p;
        }
        out
    };
    let label = |digits: &[u32]| digits.iter().rev().fold(0, |acc, &d| acc * p + d);

    let n = order as usize;
    let mut add = vec![0; n * n];
    let mut mul = vec![0; n * n];
    for a in 0..order {
        let da = digits(a);
        for b in 0..order {
            let db = digits(b);
            let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            add[a as usize * n + b as usize] = label(&sum);
            let prod = poly_mul_mod(&da, &db, &reducing, p);
            mul[a as usize * n + b as usize] = label(&prod);
        }
    }
    Ok(FieldSpec {
        order,
        characteristic: p,
        reducing,
        add,
        mul,
    })
}

fn poly_mul_mod(a: &[u32], b: &[u32], reducing: &[u32], p: u32) -> Vec<u32> {
    let k = reducing.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Reduce from the top using X^k = -(lower terms of the reducing polynomial).
    for top in (k..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for (i, &r) in reducing[..k].iter().enumerate() {
            let idx = top - k + i;
            prod[idx] = (prod[idx] + (p - c) * r % p) % p;
        }
    }
    prod.truncate(k);
    prod
}

/// First monic irreducible of degree `k` over `GF(p)`, lower coefficients
/// enumerated as base-`p` integers.
fn first_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = (p as u64).pow(k as u32);
    for code in 0..count {
        let mut poly = Vec::with_capacity(k + 1);
        let mut rest = code;
        for _ in 0..k {
            poly.push((rest % p as u64) as u32);
            rest /= p as u64;
        }
        poly.push(1);
        if is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1 ..= deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut divisor = Vec::with_capacity(d + 1);
            let mut rest = code;
            for _ in 0..d {
                divisor.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            divisor.push(1);
            if poly_rem(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(num: &[u32], monic: &[u32], p: u32) -> Vec<u32> {
    let mut rem = num.to_vec();
    let d = monic.len() - 1;
    while rem.len() > d {
        let top = rem.len() - 1;
        let c = rem[top];
        for (i, &m) in monic.iter().enumerate() {
            let idx = top - d + i;
            rem[idx] = (rem[idx] + (p - c) * m % p) % p;
        }
        rem.pop();
    }
    rem
}

impl FieldSpec {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    /// The reducing polynomial, lowest coefficient first.
    pub fn reducing_polynomial(&self) -> &[u32] {
        &self.reducing
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.order as usize + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order as usize + b as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.order).find(|&b| self.add(a, b) == 0).unwrap_or(0)
    }

    /// Exhaustively checks the field axioms on the tables.
    pub fn satisfies_field_axioms(&self) -> bool {
        let els = 0..self.order;
        let assoc_comm = els.clone().all(|a| {
            els.clone().all(|b| {
                self.add(a, b) == self.add(b, a)
                    && self.mul(a, b) == self.mul(b, a)
                    && els.clone().all(|c| {
                        self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                            && self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                            && self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
                    })
            })
        });
        let identities = els.clone().all(|a| self.add(a, 0) == a && self.mul(a, 1) == a);
        let inverses = els.clone().all(|a| els.clone().any(|b| self.add(a, b) == 0))
            && (1..self.order).all(|a| (1..self.order).any(|b| self.mul(a, b) == 1));
        assoc_comm && identities && inverses
    }
}

/// A table `a -> (e_1, ..., e_{l1})` over `F_m`, extended coordinatewise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayMap {
    modulus: Modulus,
    field: FieldSpec,
    rows: Vec<Vec<u32>>,
}

/// Positions (0-based) that must be nonzero in the row for `a`.
pub fn support_positions(a: u32, modulus: Modulus) -> std::ops::Range<usize> {
    let width = modulus.lee_max() as usize;
    let w = lee_weight(a, modulus) as usize;
    if a == 0 {
        0..0
    } else if a < modulus.lee_max() {
        width - w..width
    } else if a == modulus.lee_max() {
        0..width
    } else {
        0..w
    }
}

/// The Gray map with the standard support patterns: rows for `0 < a < l1`
/// are right-aligned blocks of `wt_L(a)` nonzeros, `a = l1` is all nonzero,
/// rows for `a > l1` are left-aligned. Entries are `1` for `a <= l1` and the
/// label `m - 1` for `a > l1`.
pub fn canonical_gray_map(modulus: Modulus, field: FieldSpec) -> GrayMap {
    let width = modulus.lee_max() as usize;
    let high = field.order() - 1;
    let rows = (0..modulus.ell())
        .map(|a| {
            let mut row = vec![0; width];
            let entry = if a <= modulus.lee_max() { 1 } else { high };
            for slot in &mut row[support_positions(a, modulus)] {
                *slot = entry;
            }
            row
        })
        .collect();
    GrayMap { modulus, field, rows }
}

impl GrayMap {
    /// A user-supplied table; rows need `l1` field labels each.
    pub fn from_rows(modulus: Modulus, field: FieldSpec, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != modulus.ell() as usize {
            return Err(Error::LengthMismatch {
                expected: modulus.ell() as usize,
                found: rows.len(),
            });
        }
        for row in &rows {
            if row.len() != modulus.lee_max() as usize {
                return Err(Error::LengthMismatch {
                    expected: modulus.lee_max() as usize,
                    found: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&e| e >= field.order()) {
                return Err(Error::OutOfRange(format!(
                    "label {bad} is not an element of GF({})",
                    field.order()
                )));
            }
        }
        Ok(GrayMap { modulus, field, rows })
    }

    /// Parses the table format `a : e1 e2 ...`, one line per residue.
    /// Blank lines and `#` comments are skipped.
    pub fn parse_table(modulus: Modulus, field: FieldSpec, text: &str) -> Result<Self> {
        let mut rows: Vec<Option<Vec<u32>>> = vec![None; modulus.ell() as usize];
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let (lhs, rhs) = line.split_once(':').ok_or_else(|| err("expected `a : e1 ...`".into()))?;
            let a: usize = lhs.trim().parse().map_err(|_| err(format!("bad residue {lhs:?}")))?;
            let row = rhs
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| err(format!("bad label {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let slot = rows
                .get_mut(a)
                .ok_or_else(|| err(format!("residue {a} out of range")))?;
            if slot.replace(row).is_some() {
                return Err(err(format!("residue {a} listed twice")));
            }
        }
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(a, r)| {
                r.ok_or(Error::Parse {
                    line: 0,
                    msg: format!("missing row for residue {a}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GrayMap::from_rows(modulus, field, rows)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, a: u32) -> &[u32] {
        &self.rows[a as usize]
    }

    /// Image of a vector: the rows of its coordinates, concatenated.
    pub fn apply(&self, v: &RingVector) -> Result<Vec<u32>> {
        if v.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                expected: self.modulus.ell(),
                found: v.modulus().ell(),
            });
        }
        Ok(v.entries()
            .iter()
            .flat_map(|&a| self.rows[a as usize].iter().copied())
            .collect())
    }

    /// Hamming weight of every row equals the Lee weight of its residue.
    pub fn is_weight_preserving(&self) -> bool {
        self.rows.iter().enumerate().all(|(a, row)| {
            row.iter().filter(|&&e| e != 0).count() as u32 == lee_weight(a as u32, self.modulus)
        })
    }

    /// Whether the coordinatewise extension is a bijection `Z_l^n -> F_m^(l1 n)`:
    /// requires `l = m^l1` and pairwise distinct rows.
    pub fn is_bijective_extension(&self) -> bool {
        let m = self.field.order() as u64;
        let sizes_match = crate::arith::checked_pow(m, self.modulus.lee_max() as u64)
            == Some(self.modulus.ell() as u64);
        let distinct = self.rows.iter().collect::<HashSet<_>>().len() == self.rows.len();
        sizes_match && distinct
    }

    /// Whether `phi(C)` is closed under field addition and scalar multiplication.
    pub fn image_is_linear(&self, code: &LinearCode) -> Result<bool> {
        let image: Vec<Vec<u32>> = code
            .codewords()?
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<_>>()?;
        let set: HashSet<&Vec<u32>> = image.iter().collect();
        let f = &self.field;
        let sums_closed = image.iter().all(|u| {
            image.iter().all(|v| {
                let s: Vec<u32> = u.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect();
                set.contains(&s)
            })
        });
        let scalars_closed = (2..f.order()).all(|lambda| {
            image.iter().all(|u| {
                let s: Vec<u32> = u.iter().map(|&a| f.mul(lambda, a)).collect();
                set.contains(&s)
            })
        });
        Ok(sums_closed && scalars_closed)
    }
}

/// Table format, one `a : e1 ... e_l1` line per residue.
impl fmt::Display for GrayMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, row) in self.rows.iter().enumerate() {
            write!(f, "{a} :")?;
            for e in row {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
