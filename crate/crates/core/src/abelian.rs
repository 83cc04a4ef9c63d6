//! Finite abelian groups `Z/d1 + ... + Z/dk` in invariant-factor form and
//! their automorphism groups as integer matrices.
//!
//! Elements are encoded in mixed radix: coordinates `(c1, ..., ck)` with
//! `0 <= ci < di` map to `c1 + d1 * (c2 + d2 * (c3 + ...))`, so index 0 is
//! the zero element.
//!
//! An endomorphism sends generator `gj` to `sum_i A[i][j] gi`, with row `i`
//! reduced modulo `di`. It is well defined exactly when
//! `di / gcd(di, dj)` divides `A[i][j]`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::permgroups::{GroupElement, Permutation};
use crate::tables::CayleyTable;
use crate::{Error, Result};

pub const DEFAULT_AUT_BUDGET: usize = 1_000_000;
/// Upper bound on candidate matrices examined for a single prime.
pub const DEFAULT_CANDIDATE_BUDGET: usize = 50_000_000;

/// Invariant factors `d1 | d2 | ... | dk`, each at least 2. The empty
/// chain is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianInvariants {
    chain: Vec<u64>,
}

impl AbelianInvariants {
    pub fn new(chain: Vec<u64>) -> Result<Self> {
        if let Some(&d) = chain.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidChain(format!("factor {d} is less than 2")));
        }
        if let Some(w) = chain.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidChain(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(Self { chain })
    }

    pub fn trivial() -> Self {
        Self { chain: Vec::new() }
    }

    /// Canonical invariants of `Z/m1 + Z/m2 + ...` for arbitrary cyclic
    /// orders; factors equal to 1 are dropped.
    pub fn from_cyclic_factors(factors: &[u64]) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidChain("cyclic factor 0".into()));
        }
        // per prime, the multiset of exponents
        let mut per_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &m in factors {
            for (p, e) in factorize(m) {
                match per_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, es)) => es.push(e),
                    None => per_prime.push((p, vec![e])),
                }
            }
        }
        Ok(Self::from_prime_partitions(&per_prime))
    }

    fn from_prime_partitions(parts: &[(u64, Vec<u32>)]) -> Self {
        let len = parts.iter().map(|(_, es)| es.len()).max().unwrap_or(0);
        let mut chain = vec![1u64; len];
        for (p, es) in parts {
            let mut es = es.clone();
            es.sort_unstable();
            // largest exponent goes into the last factor
            for (k, e) in es.iter().rev().enumerate() {
                chain[len - 1 - k] *= p.pow(*e);
            }
        }
        Self { chain }
    }

    pub fn chain(&self) -> &[u64] {
        &self.chain
    }

    pub fn rank(&self) -> usize {
        self.chain.len()
    }

    pub fn order(&self) -> u64 {
        self.chain.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.chain.len() <= 1
    }

    pub fn encode(&self, coords: &[u64]) -> usize {
        let mut idx = 0u64;
        for (c, d) in coords.iter().zip(&self.chain).rev() {
            idx = idx * d + c;
        }
        idx as usize
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u64> {
        self.chain
            .iter()
            .map(|&d| {
                let c = idx as u64 % d;
                idx /= d as usize;
                c
            })
            .collect()
    }

    /// Name without spaces, e.g. `C2xC6`.
    pub fn compact_name(&self) -> String {
        if self.chain.is_empty() {
            return "C1".into();
        }
        self.chain
            .iter()
            .map(|d| format!("C{d}"))
            .collect::<Vec<_>>()
            .join("x")
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chain.is_empty() {
            return f.write_str("C1");
        }
        let names: Vec<String> = self.chain.iter().map(|d| format!("C{d}")).collect();
        f.write_str(&names.join(" x "))
    }
}

impl FromStr for AbelianInvariants {
    type Err = Error;

    /// Accepts `C2 x C6`, `C2xC6`, `2,6`, `2x6` or `2 6`; the factors need
    /// not form a chain and are normalized.
    fn from_str(s: &str) -> Result<Self> {
        let factors: Vec<u64> = s
            .split(|c: char| c == ',' || c == 'x' || c == '*' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let digits = t.strip_prefix('C').unwrap_or(t);
                digits
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidChain(format!("`{t}` is not a cyclic factor")))
            })
            .collect::<Result<_>>()?;
        if factors.is_empty() {
            return Err(Error::InvalidChain(format!("no factors in `{s}`")));
        }
        Self::from_cyclic_factors(&factors)
    }
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One chain per isomorphism class of abelian groups of order `n`, sorted
/// by rank and then by factors, so the cyclic group comes first.
pub fn abelian_groups_of_order(n: u64) -> Vec<AbelianInvariants> {
    assert!(n >= 1, "order must be positive");
    let primes = factorize(n);
    let mut combos: Vec<Vec<(u64, Vec<u32>)>> = vec![Vec::new()];
    for &(p, e) in &primes {
        let mut next = Vec::new();
        for combo in &combos {
            for part in partitions(e, e) {
                let mut c = combo.clone();
                c.push((p, part));
                next.push(c);
            }
        }
        combos = next;
    }
    let mut out: Vec<AbelianInvariants> = combos
        .iter()
        .map(|c| AbelianInvariants::from_prime_partitions(c))
        .collect();
    out.sort_by(|a, b| a.rank().cmp(&b.rank()).then_with(|| a.chain.cmp(&b.chain)));
    out
}

/// Addition table under the mixed-radix encoding.
pub fn abelian_table(g: &AbelianInvariants) -> CayleyTable {
    let n = g.order() as usize;
    let coords: Vec<Vec<u64>> = (0..n).map(|x| g.decode(x)).collect();
    CayleyTable::from_fn(n, |i, j| {
        let sum: Vec<u64> = coords[i]
            .iter()
            .zip(&coords[j])
            .zip(&g.chain)
            .map(|((a, b), d)| (a + b) % d)
            .collect();
        g.encode(&sum)
    })
    .expect("entries in range")
}

/// An endomorphism of `Z/d1 + ... + Z/dk` as a row-major `k x k` matrix.
///
/// Equality, hashing and ordering look at the entries only; matrices are
/// compared within one group.
#[derive(Clone)]
pub struct EndoMatrix {
    moduli: Arc<[u64]>,
    entries: Vec<u64>,
}

impl EndoMatrix {
    pub fn new(g: &AbelianInvariants, entries: Vec<u64>) -> Result<Self> {
        let k = g.rank();
        if entries.len() != k * k {
            return Err(Error::InvalidChain(format!(
                "expected {} matrix entries, found {}",
                k * k,
                entries.len()
            )));
        }
        let d = &g.chain;
        let mut entries = entries;
        for i in 0..k {
            for j in 0..k {
                let e = &mut entries[i * k + j];
                *e %= d[i];
                let step = d[i] / gcd(d[i], d[j]);
                if !(*e).is_multiple_of(step) {
                    return Err(Error::InvalidChain(format!(
                        "entry ({i}, {j}) = {e} is not a multiple of {step}"
                    )));
                }
            }
        }
        Ok(Self {
            moduli: g.chain.clone().into(),
            entries,
        })
    }

    pub fn identity(g: &AbelianInvariants) -> Self {
        Self::scalar(g, 1)
    }

    /// `x -> -x`
    pub fn negation(g: &AbelianInvariants) -> Self {
        let k = g.rank();
        let mut entries = vec![0; k * k];
        for i in 0..k {
            entries[i * k + i] = g.chain[i] - 1;
        }
        Self {
            moduli: g.chain.clone().into(),
            entries,
        }
    }

    fn scalar(g: &AbelianInvariants, s: u64) -> Self {
        let k = g.rank();
        let mut entries = vec![0; k * k];
        for i in 0..k {
            entries[i * k + i] = s % g.chain[i];
        }
        Self {
            moduli: g.chain.clone().into(),
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.rank() + j]
    }

    /// Image of an element given by its coordinates.
    pub fn apply(&self, coords: &[u64]) -> Vec<u64> {
        let k = self.rank();
        (0..k)
            .map(|i| {
                let d = self.moduli[i];
                (0..k).fold(0u64, |acc, j| (acc + self.get(i, j) * (coords[j] % d)) % d)
            })
            .collect()
    }
}

impl GroupElement for EndoMatrix {
    fn compose(&self, other: &Self) -> Self {
        let k = self.rank();
        let mut entries = vec![0u64; k * k];
        for i in 0..k {
            let d = self.moduli[i];
            for j in 0..k {
                let mut acc = 0u64;
                for l in 0..k {
                    acc = (acc + self.get(i, l) * (other.get(l, j) % d)) % d;
                }
                entries[i * k + j] = acc;
            }
        }
        Self {
            moduli: self.moduli.clone(),
            entries,
        }
    }

    /// Found as the power preceding the identity; assumes `self` is invertible.
    fn inverse(&self) -> Self {
        let mut prev = self.compose_identity();
        let mut cur = self.clone();
        let mut steps = 0usize;
        while !cur.is_identity() {
            prev = cur.clone();
            cur = cur.compose(self);
            steps += 1;
            assert!(steps < 1 << 32, "matrix is not invertible");
        }
        prev
    }

    fn is_identity(&self) -> bool {
        let k = self.rank();
        (0..k).all(|i| (0..k).all(|j| self.get(i, j) == u64::from(i == j) % self.moduli[i]))
    }
}

impl EndoMatrix {
    fn compose_identity(&self) -> Self {
        let k = self.rank();
        let mut entries = vec![0; k * k];
        for i in 0..k {
            entries[i * k + i] = 1 % self.moduli[i];
        }
        Self {
            moduli: self.moduli.clone(),
            entries,
        }
    }
}

impl PartialEq for EndoMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for EndoMatrix {}

impl Hash for EndoMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl PartialOrd for EndoMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EndoMatrix {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl fmt::Debug for EndoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.rank();
        let rows: Vec<&[u64]> = (0..k).map(|i| &self.entries[i * k..(i + 1) * k]).collect();
        write!(f, "{rows:?}")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Automorphisms of the `p`-primary part, as square matrices over the chain
/// positions where `p` divides the factor.
fn primary_automorphisms(exps: &[u32], p: u64, candidate_budget: usize) -> Result<Vec<Vec<u64>>> {
    let k = exps.len();
    let pe: Vec<u64> = exps.iter().map(|&e| p.pow(e)).collect();
    // entry (i, j) = t * step[i][j], 0 <= t < choices[i][j]
    let mut step = vec![0u64; k * k];
    let mut choices = vec![0u64; k * k];
    let mut total: u128 = 1;
    for i in 0..k {
        for j in 0..k {
            step[i * k + j] = p.pow(exps[i].saturating_sub(exps[j]));
            choices[i * k + j] = p.pow(exps[i].min(exps[j]));
            total *= u128::from(choices[i * k + j]);
        }
    }
    if total > candidate_budget as u128 {
        return Err(Error::BudgetExceeded {
            budget: candidate_budget,
            what: format!("{total} candidate endomorphisms of the {p}-part"),
        });
    }

    // nonzero elements of order p: coordinates in p^(e-1) * {0..p-1}
    let socle_size = p.pow(k as u32);
    let socle: Vec<Vec<u64>> = (1..socle_size)
        .map(|mut m| {
            (0..k)
                .map(|i| {
                    let c = m % p;
                    m /= p;
                    c * (pe[i] / p)
                })
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut t = vec![0u64; k * k];
    let mut a = vec![0u64; k * k];
    'outer: loop {
        for (idx, v) in a.iter_mut().enumerate() {
            *v = t[idx] * step[idx];
        }
        // injective iff no element of order p is killed
        let injective = socle.iter().all(|c| {
            (0..k).any(|i| {
                let s = (0..k).fold(0u64, |acc, j| (acc + a[i * k + j] * c[j]) % pe[i]);
                s != 0
            })
        });
        if injective {
            out.push(a.clone());
        }
        for idx in (0..k * k).rev() {
            t[idx] += 1;
            if t[idx] < choices[idx] {
                continue 'outer;
            }
            t[idx] = 0;
        }
        break;
    }
    Ok(out)
}

pub fn aut_abelian(g: &AbelianInvariants) -> Result<Vec<EndoMatrix>> {
    aut_abelian_with_budget(g, DEFAULT_AUT_BUDGET, DEFAULT_CANDIDATE_BUDGET)
}

/// Every automorphism, sorted by entries.
///
/// The automorphism group is the direct product of the automorphism groups
/// of the primary components; each component is enumerated separately and
/// the results are glued coordinate-wise by the Chinese remainder theorem.
pub fn aut_abelian_with_budget(
    g: &AbelianInvariants,
    budget: usize,
    candidate_budget: usize,
) -> Result<Vec<EndoMatrix>> {
    let k = g.rank();
    if k == 0 {
        return Ok(vec![EndoMatrix::identity(g)]);
    }
    let d = &g.chain;
    let primes: Vec<u64> = factorize(g.order()).into_iter().map(|(p, _)| p).collect();

    struct Component {
        p: u64,
        first: usize,
        autos: Vec<Vec<u64>>,
    }
    let mut components = Vec::new();
    let mut size: u128 = 1;
    for &p in &primes {
        let exps: Vec<u32> = d
            .iter()
            .map(|&di| {
                factorize(di)
                    .into_iter()
                    .find(|&(q, _)| q == p)
                    .map_or(0, |(_, e)| e)
            })
            .collect();
        // exponents are non-decreasing along the chain
        let first = exps
            .iter()
            .position(|&e| e > 0)
            .expect("p divides the order");
        let autos = primary_automorphisms(&exps[first..], p, candidate_budget)?;
        size *= autos.len() as u128;
        if size > budget as u128 {
            return Err(Error::BudgetExceeded {
                budget,
                what: "automorphism group size".into(),
            });
        }
        components.push(Component { p, first, autos });
    }

    // idempotents: crt[c][i] is 1 mod the p-part of d[i] and 0 mod the rest
    let crt: Vec<Vec<u64>> = components
        .iter()
        .map(|c| {
            d.iter()
                .map(|&di| {
                    let pe = factorize(di)
                        .into_iter()
                        .find(|&(q, _)| q == c.p)
                        .map_or(1, |(q, e)| q.pow(e));
                    let rest = di / pe;
                    if pe == 1 {
                        return 0;
                    }
                    // rest * (rest^-1 mod pe)
                    let inv = (1..pe)
                        .find(|&u| (rest % pe) * u % pe == 1 % pe)
                        .unwrap_or(0);
                    (rest * inv) % di
                })
                .collect()
        })
        .collect();

    let moduli: Arc<[u64]> = d.clone().into();
    let mut out = Vec::with_capacity(size as usize);
    let mut choice = vec![0usize; components.len()];
    loop {
        let mut entries = vec![0u64; k * k];
        for (ci, comp) in components.iter().enumerate() {
            let local = &comp.autos[choice[ci]];
            let m = k - comp.first;
            for i in 0..m {
                for j in 0..m {
                    let (gi, gj) = (comp.first + i, comp.first + j);
                    let e = &mut entries[gi * k + gj];
                    *e = (*e + local[i * m + j] * crt[ci][gi]) % d[gi];
                }
            }
        }
        out.push(EndoMatrix {
            moduli: moduli.clone(),
            entries,
        });
        let mut pos = components.len();
        loop {
            if pos == 0 {
                out.sort();
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < components[pos].autos.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// The permutation of element indices induced by an automorphism.
pub fn matrix_to_permutation(g: &AbelianInvariants, a: &EndoMatrix) -> Result<Permutation> {
    if a.rank() != g.rank() || a.moduli[..] != g.chain[..] {
        return Err(Error::InvalidChain(
            "matrix belongs to a different group".into(),
        ));
    }
    let n = g.order() as usize;
    let images: Vec<usize> = (0..n).map(|x| g.encode(&a.apply(&g.decode(x)))).collect();
    Permutation::from_images(images).map_err(|_| Error::NotInvertible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{aut_quasigroup, check_identity, is_latin, Identity};

    fn inv(chain: &[u64]) -> AbelianInvariants {
        AbelianInvariants::new(chain.to_vec()).unwrap()
    }

    fn partition_count(n: u32) -> usize {
        partitions(n, n).len()
    }

    #[test]
    fn groups_of_order_examples() {
        assert_eq!(abelian_groups_of_order(12), vec![inv(&[12]), inv(&[2, 6])]);
        assert_eq!(abelian_groups_of_order(7), vec![inv(&[7])]);
        assert_eq!(
            abelian_groups_of_order(2009),
            vec![inv(&[2009]), inv(&[7, 287])]
        );
        assert_eq!(
            abelian_groups_of_order(1),
            vec![AbelianInvariants::trivial()]
        );
        assert_eq!(
            abelian_groups_of_order(16),
            vec![
                inv(&[16]),
                inv(&[2, 8]),
                inv(&[4, 4]),
                inv(&[2, 2, 4]),
                inv(&[2, 2, 2, 2])
            ]
        );
    }

    #[test]
    fn group_counts_match_partition_products() {
        for n in 1..=100u64 {
            let expected: usize = factorize(n)
                .iter()
                .map(|&(_, e)| partition_count(e))
                .product();
            let groups = abelian_groups_of_order(n);
            assert_eq!(groups.len(), expected, "n = {n}");
            for g in groups {
                assert_eq!(g.order(), n);
                assert!(AbelianInvariants::new(g.chain().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn chain_validation_and_parsing() {
        assert!(AbelianInvariants::new(vec![2, 3]).is_err());
        assert!(AbelianInvariants::new(vec![1, 3]).is_err());
        assert_eq!(
            "C2 x C6".parse::<AbelianInvariants>().unwrap(),
            inv(&[2, 6])
        );
        assert_eq!("2,6".parse::<AbelianInvariants>().unwrap(), inv(&[2, 6]));
        assert_eq!("3x4".parse::<AbelianInvariants>().unwrap(), inv(&[12]));
        assert_eq!(
            "287 7".parse::<AbelianInvariants>().unwrap(),
            inv(&[7, 287])
        );
        assert!("Cx".parse::<AbelianInvariants>().is_err());
        assert_eq!(inv(&[2, 6]).to_string(), "C2 x C6");
        assert_eq!(inv(&[2, 6]).compact_name(), "C2xC6");
    }

    #[test]
    fn tables_are_abelian_groups() {
        let z3 = abelian_table(&inv(&[3]));
        assert_eq!(z3, CayleyTable::from_fn(3, |i, j| (i + j) % 3).unwrap());
        let klein = abelian_table(&inv(&[2, 2]));
        assert!((0..4).all(|x| klein.get(x, x) == 0));
        for g in abelian_groups_of_order(12)
            .into_iter()
            .chain(abelian_groups_of_order(16))
        {
            let t = abelian_table(&g);
            assert!(is_latin(&t));
            assert!(check_identity(&t, Identity::Associative).holds());
            assert!(check_identity(&t, Identity::Commutative).holds());
            assert_eq!(crate::tables::left_identity(&t), Some(0));
        }
    }

    #[test]
    fn endo_matrix_well_definedness() {
        let g = inv(&[2, 4]);
        // g2 (order 4) -> g1 (order 2) is fine, g1 -> g2 must land in 2Z/4
        assert!(EndoMatrix::new(&g, vec![1, 1, 0, 1]).is_ok());
        assert!(EndoMatrix::new(&g, vec![1, 0, 1, 1]).is_err());
        assert!(EndoMatrix::new(&g, vec![1, 0, 2, 1]).is_ok());
    }

    #[test]
    fn aut_sizes() {
        assert_eq!(aut_abelian(&inv(&[2, 2])).unwrap().len(), 6);
        assert_eq!(aut_abelian(&inv(&[12])).unwrap().len(), 4);
        assert_eq!(aut_abelian(&inv(&[2, 6])).unwrap().len(), 12);
        assert_eq!(aut_abelian(&inv(&[2, 2, 2, 2])).unwrap().len(), 20160);
        assert_eq!(aut_abelian(&AbelianInvariants::trivial()).unwrap().len(), 1);
        assert_eq!(aut_abelian(&inv(&[2])).unwrap().len(), 1);
    }

    #[test]
    fn aut_of_order_2009() {
        let g = inv(&[7, 287]);
        let aut = aut_abelian(&g).unwrap();
        assert_eq!(aut.len(), 40 * 2016);
        assert_eq!(aut_abelian(&inv(&[2009])).unwrap().len(), 42 * 40);
    }

    #[test]
    fn aut_budget() {
        let err = aut_abelian_with_budget(&inv(&[2, 2, 2, 2]), 1000, DEFAULT_CANDIDATE_BUDGET);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
        let err = aut_abelian_with_budget(&inv(&[2, 2, 2, 2]), DEFAULT_AUT_BUDGET, 100);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn matrix_aut_matches_table_search() {
        for n in 1..=16u64 {
            for g in abelian_groups_of_order(n) {
                let from_matrices: Vec<Permutation> = {
                    let mut v: Vec<Permutation> = aut_abelian(&g)
                        .unwrap()
                        .iter()
                        .map(|a| matrix_to_permutation(&g, a).unwrap())
                        .collect();
                    v.sort();
                    v
                };
                let searched = aut_quasigroup(&abelian_table(&g)).unwrap();
                assert_eq!(from_matrices, searched.elements(), "{g}");
            }
        }
    }

    #[test]
    fn matrix_set_is_a_group_and_maps_homomorphically() {
        for n in 1..=16u64 {
            for g in abelian_groups_of_order(n) {
                let aut = aut_abelian(&g).unwrap();
                if aut.len() > 2000 {
                    continue;
                }
                assert_eq!(aut.iter().filter(|a| a.is_identity()).count(), 1);
                let set: std::collections::HashSet<&EndoMatrix> = aut.iter().collect();
                let perms: Vec<Permutation> = aut
                    .iter()
                    .map(|a| matrix_to_permutation(&g, a).unwrap())
                    .collect();
                let distinct: std::collections::HashSet<&Permutation> = perms.iter().collect();
                assert_eq!(distinct.len(), aut.len(), "injective on {g}");
                for (a, pa) in aut.iter().zip(&perms).step_by(3) {
                    assert!(set.contains(&a.compose(a)));
                    for (b, pb) in aut.iter().zip(&perms) {
                        let ab = a.compose(b);
                        assert!(set.contains(&ab));
                        assert_eq!(matrix_to_permutation(&g, &ab).unwrap(), pa.compose(pb));
                    }
                }
            }
        }
    }

    #[test]
    fn matrix_permutation_examples() {
        let g = inv(&[6]);
        let id = matrix_to_permutation(&g, &EndoMatrix::identity(&g)).unwrap();
        assert!(id.is_identity());
        let neg = matrix_to_permutation(&g, &EndoMatrix::negation(&g)).unwrap();
        assert_eq!(neg.images(), &[0, 5, 4, 3, 2, 1]);
        let zero = EndoMatrix::new(&g, vec![0]).unwrap();
        assert_eq!(matrix_to_permutation(&g, &zero), Err(Error::NotInvertible));
        for a in aut_abelian(&inv(&[2, 6])).unwrap() {
            assert_eq!(
                matrix_to_permutation(&inv(&[2, 6]), &a).unwrap().apply(0),
                0
            );
            assert!(a.compose(&a.inverse()).is_identity());
        }
    }
}
