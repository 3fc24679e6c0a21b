//! Monomials as dense exponent vectors and monomial ideals stored by their
//! unique minimal generating set.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported number of variables. Faces of simplicial complexes are
/// stored as `u32` bitmasks, which caps the ambient size.
pub const MAX_VARS: usize = 32;

/// The polynomial ring `k[x_1..x_n]`: number of variables and the
/// characteristic of `k` used for homology coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AmbientContext {
    n: usize,
    field_char: u32,
}

impl AmbientContext {
    pub fn new(n: usize, field_char: u32) -> Result<Self> {
        if !(3..=MAX_VARS).contains(&n) {
            return Err(Error::InvalidAmbientSize {
                got: n,
                max: MAX_VARS,
            });
        }
        if field_char != 0 && !is_prime(field_char) {
            return Err(Error::InvalidCharacteristic(field_char));
        }
        Ok(Self { n, field_char })
    }

    /// Characteristic zero.
    pub fn with_vars(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_char(&self) -> u32 {
        self.field_char
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `x^a = x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Self { exps: exps.into() }
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::new(e)
    }

    /// Squarefree monomial `prod_{i in vars} x_i` (1-based indices).
    pub fn squarefree(n: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; n];
        for &v in vars {
            e[v - 1] = 1;
        }
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect::<Vec<_>>(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect::<Vec<_>>(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial::new(self.exps.iter().map(|a| a * k).collect::<Vec<_>>())
    }

    /// Exponents clamped to 0/1.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&a| a.min(1)).collect::<Vec<_>>())
    }

    /// Bit `i-1` is set iff `x_i` divides the monomial.
    pub fn support_mask(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .fold(0u32, |m, (i, _)| m | (1 << i))
    }
}

impl Ord for Monomial {
    /// Degree first, then exponent vectors lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, a)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A monomial ideal held as its minimal generating set, sorted by
/// (degree, exponents). Since the minimal generating set is unique, derived
/// equality is ideal equality.
///
/// No generators is the zero ideal; the single generator `1` is the unit ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: AmbientContext,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn check_len(ambient: &AmbientContext, m: &Monomial) -> Result<()> {
    if m.n() != ambient.n() {
        return Err(Error::AmbientMismatch {
            expected: ambient.n(),
            found: m.n(),
        });
    }
    Ok(())
}

/// Keeps the divisibility-minimal elements. Input need not be sorted or
/// deduplicated; output is sorted canonically.
fn minimal_elements(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // Only strictly lower degrees can divide a distinct monomial, and
        // `kept` is degree-sorted.
        let deg = g.degree();
        let divisible = kept
            .iter()
            .take_while(|k| k.degree() < deg)
            .any(|k| k.divides(&g));
        if !divisible {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimalize(
        ambient: AmbientContext,
        gens: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_len(&ambient, g)?;
        }
        Ok(Self {
            ambient,
            gens: minimal_elements(gens),
        })
    }

    pub fn zero(ambient: AmbientContext) -> Self {
        Self {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: AmbientContext) -> Self {
        Self {
            ambient,
            gens: vec![Monomial::one(ambient.n())],
        }
    }

    /// `P^m` where `P` is generated by the variables in `vars` (1-based):
    /// all monomials of degree `m` supported on `vars`.
    pub fn prime_power(ambient: AmbientContext, vars: &[usize], m: u32) -> Result<Self> {
        let mut vars: Vec<usize> = vars.to_vec();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::EmptyVariableSet);
        }
        let n = ambient.n();
        if let Some(&bad) = vars.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::VariableOutOfRange { index: bad, n });
        }
        let mut gens = Vec::new();
        let mut exps = vec![0u32; n];
        compositions(&vars, 0, m, &mut exps, &mut gens);
        Ok(Self {
            ambient,
            gens: minimal_elements(gens),
        })
    }

    pub fn ambient(&self) -> AmbientContext {
        self.ambient
    }

    pub fn n(&self) -> usize {
        self.ambient.n()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].degree() == 0
    }

    /// Smallest generator degree, `None` for the zero ideal.
    pub fn min_degree(&self) -> Option<u32> {
        self.gens.first().map(Monomial::degree)
    }

    /// Coordinate-wise maximum over the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut rho = vec![0u32; self.n()];
        for g in &self.gens {
            for (r, &e) in rho.iter_mut().zip(g.exponents()) {
                *r = (*r).max(e);
            }
        }
        rho
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        debug_assert_eq!(f.n(), self.n());
        self.gens.iter().any(|g| g.divides(f))
    }

    fn check_same(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    /// Generated by pairwise lcms, then minimalized. Generators of one side
    /// already in the other side pass through unchanged, since every lcm
    /// they take part in is a multiple of them.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut out: HashSet<Monomial> = HashSet::new();
        let (mut rest_a, mut rest_b) = (Vec::new(), Vec::new());
        for f in &self.gens {
            if other.contains(f) {
                out.insert(f.clone());
            } else {
                rest_a.push(f);
            }
        }
        for g in &other.gens {
            if self.contains(g) {
                out.insert(g.clone());
            } else {
                rest_b.push(g);
            }
        }
        for f in &rest_a {
            for g in &rest_b {
                out.insert(f.lcm(g));
            }
        }
        Ok(MonomialIdeal {
            ambient: self.ambient,
            gens: minimal_elements(out.into_iter().collect()),
        })
    }

    /// Left-to-right intersection. An empty iterator is the unit ideal.
    pub fn intersect_all<'a>(
        ambient: AmbientContext,
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(ambient);
        for i in ideals {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same(other)?;
        let mut out: HashSet<Monomial> = HashSet::new();
        for f in &self.gens {
            for g in &other.gens {
                out.insert(f.mul(g));
            }
        }
        Ok(MonomialIdeal {
            ambient: self.ambient,
            gens: minimal_elements(out.into_iter().collect()),
        })
    }

    /// Ordinary power `I^m`; `m = 0` gives the unit ideal.
    pub fn power(&self, m: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..m {
            acc = acc.multiply(self).expect("same ambient");
        }
        acc
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            ambient: self.ambient,
            gens: minimal_elements(self.gens.iter().map(Monomial::squarefree_part).collect()),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// Ideal equality, i.e. equality of minimal generating sets.
    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self.n() == other.n() && self.gens == other.gens
    }

    /// Sets `x_i = 1` for every `i` in `vars` (1-based) and minimalizes.
    pub fn substitute_one(&self, vars: &[usize]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                for &v in vars {
                    e[v - 1] = 0;
                }
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal {
            ambient: self.ambient,
            gens: minimal_elements(gens),
        }
    }
}

fn compositions(
    vars: &[usize],
    pos: usize,
    remaining: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    let v = vars[pos] - 1;
    if pos + 1 == vars.len() {
        exps[v] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[v] = 0;
        return;
    }
    for k in 0..=remaining {
        exps[v] = k;
        compositions(vars, pos + 1, remaining - k, exps, out);
    }
    exps[v] = 0;
}
