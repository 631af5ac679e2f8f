//! Free-group words, finite presentations, Tietze simplification,
//! abelianization via Smith normal form, and homomorphism counting into
//! small finite groups.
//!
//! Equality of [`Fingerprint`]s is the working notion of "same group": it is
//! sound (isomorphic groups always agree) and sharp enough to separate the
//! groups arising here.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;

/// One letter of a word: a generator index and an exponent sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: u32,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: u32, inv: bool) -> Self {
        Self { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            inv: !self.inv,
        }
    }
}

/// A freely reduced word in the generators of a presentation.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(gen: u32, inv: bool) -> Self {
        Word(vec![Letter::new(gen, inv)])
    }

    /// Builds from letters, reducing adjacent inverse pairs.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// A generator power `g^e`.
    pub fn power(gen: u32, e: i64) -> Self {
        let l = Letter::new(gen, e < 0);
        Word((0..e.unsigned_abs()).map(|_| l).collect())
    }

    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn extend(&mut self, other: &Word) {
        for &l in &other.0 {
            self.push(l);
        }
    }

    pub fn concat(mut self, other: &Word) -> Self {
        self.extend(other);
        self
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Conjugate trims at both ends: `w -> u^-1 w u` inverses cancel here.
    pub fn cyclically_reduced(&self) -> Self {
        let mut v = self.0.clone();
        while v.len() >= 2 && v[0] == v[v.len() - 1].inverse() {
            v.pop();
            v.remove(0);
        }
        Word(v)
    }

    /// Canonical representative among all rotations of the word and of its
    /// inverse, for duplicate detection.
    pub fn cyclic_canonical(&self) -> Word {
        let w = self.cyclically_reduced();
        if w.is_empty() {
            return w;
        }
        let mut best: Option<Vec<Letter>> = None;
        for cand in [&w, &w.inverse()] {
            let n = cand.0.len();
            for s in 0..n {
                let rot: Vec<Letter> = (0..n).map(|i| cand.0[(s + i) % n]).collect();
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        Word(best.unwrap())
    }

    /// Replaces every occurrence of a generator by a word.
    pub fn substitute(&self, gen: u32, replacement: &Word) -> Word {
        let inv = replacement.inverse();
        let mut out = Word::empty();
        for &l in &self.0 {
            if l.gen == gen {
                out.extend(if l.inv { &inv } else { replacement });
            } else {
                out.push(l);
            }
        }
        out
    }

    pub fn count_gen(&self, gen: u32) -> usize {
        self.0.iter().filter(|l| l.gen == gen).count()
    }

    /// Exponent sum per generator.
    pub fn abelianized(&self, n_gens: usize) -> Vec<i64> {
        let mut row = vec![0i64; n_gens];
        for l in &self.0 {
            row[l.gen as usize] += if l.inv { -1 } else { 1 };
        }
        row
    }
}

/// A finite presentation: named generators and freely reduced relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, Error> {
        for r in &relators {
            for l in r.letters() {
                if l.gen as usize >= generators.len() {
                    return Err(Error::UnknownGenerator {
                        gen: format!("#{}", l.gen),
                    });
                }
            }
        }
        Ok(Self {
            generators,
            relators,
        })
    }

    /// The free group of the given rank.
    pub fn free(rank: usize) -> Self {
        Self {
            generators: (0..rank).map(|i| format!("g{i}")).collect(),
            relators: Vec::new(),
        }
    }

    /// Parses relators written like `"x y^-1 x"` over the named generators.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self, Error> {
        let index: BTreeMap<&str, u32> = generators
            .iter()
            .enumerate()
            .map(|(i, &g)| (g, i as u32))
            .collect();
        let mut words = Vec::new();
        for spec in relators {
            let mut w = Word::empty();
            for token in spec.split_whitespace() {
                let (name, exp) = match token.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<i64>()
                            .map_err(|_| Error::Schema(format!("bad exponent in {token}")))?,
                    ),
                    None => (token, 1),
                };
                let gen = *index
                    .get(name)
                    .ok_or_else(|| Error::UnknownGenerator { gen: name.into() })?;
                w.extend(&Word::power(gen, exp));
            }
            words.push(w);
        }
        Ok(Self {
            generators: generators.iter().map(|s| s.to_string()).collect(),
            relators: words,
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }
}

/// Relator length budget multiplier per simplification pass.
const INFLATION_GUARD: usize = 16;

/// Tietze simplification: repeatedly free/cyclically reduces relators, drops
/// empties and duplicates, and eliminates generators occurring exactly once
/// in some relator, substituting them everywhere else. The group is
/// unchanged up to isomorphism. Runs until a fixpoint or `max_passes`.
pub fn tietze_simplify(pres: &Presentation, max_passes: usize) -> Presentation {
    let mut gens: Vec<String> = pres.generators.clone();
    let mut alive: Vec<bool> = vec![true; gens.len()];
    let mut relators: Vec<Word> = pres.relators.clone();

    for _ in 0..max_passes {
        let mut changed = false;

        // Normalize: cyclic reduction, drop empties, dedup canonical forms.
        let mut seen = std::collections::BTreeSet::new();
        let mut next = Vec::with_capacity(relators.len());
        for r in &relators {
            let red = r.cyclically_reduced();
            if red.is_empty() {
                changed = changed || !r.is_empty();
                continue;
            }
            if seen.insert(red.cyclic_canonical()) {
                if red != *r {
                    changed = true;
                }
                next.push(red);
            } else {
                changed = true;
            }
        }
        relators = next;

        // Eliminate generators with a single occurrence in some relator,
        // cheapest substitution first, under the inflation guard.
        let pass_budget = INFLATION_GUARD * relators.iter().map(Word::len).sum::<usize>().max(1);
        loop {
            let total: usize = relators.iter().map(Word::len).sum();
            let mut occurrences: BTreeMap<u32, usize> = BTreeMap::new();
            for r in &relators {
                for l in r.letters() {
                    *occurrences.entry(l.gen).or_default() += 1;
                }
            }
            let mut best: Option<(usize, usize, u32)> = None; // (cost, relator, gen)
            for (ri, r) in relators.iter().enumerate() {
                for l in r.letters() {
                    if r.count_gen(l.gen) != 1 {
                        continue;
                    }
                    let elsewhere = occurrences[&l.gen] - 1;
                    let cost = elsewhere * (r.len() - 1);
                    if total - r.len() + cost <= pass_budget
                        && best.is_none_or(|(c, _, g)| (cost, l.gen) < (c, g))
                    {
                        best = Some((cost, ri, l.gen));
                    }
                }
            }
            let Some((_, ri, gen)) = best else { break };
            let relator = relators.remove(ri);
            // Rotate the single occurrence of `gen` to the front and solve.
            let pos = relator
                .letters()
                .iter()
                .position(|l| l.gen == gen)
                .unwrap();
            let n = relator.len();
            let rotated =
                Word::from_letters((0..n).map(|i| relator.letters()[(pos + i) % n]));
            let first = rotated.letters()[0];
            let rest = Word::from_letters(rotated.letters()[1..].iter().copied());
            // rotated = first * rest = 1, so gen^(±1) = rest^-1.
            let replacement = if first.inv {
                rest
            } else {
                rest.inverse()
            };
            for r in relators.iter_mut() {
                if r.count_gen(gen) > 0 {
                    *r = r.substitute(gen, &replacement).cyclically_reduced();
                }
            }
            relators.retain(|r| !r.is_empty());
            alive[gen as usize] = false;
            changed = true;
        }

        if !changed {
            break;
        }
    }

    // Compact the surviving generators.
    let mut remap = vec![u32::MAX; gens.len()];
    let mut new_gens = Vec::new();
    for (i, name) in gens.drain(..).enumerate() {
        if alive[i] {
            remap[i] = new_gens.len() as u32;
            new_gens.push(name);
        }
    }
    let relators = relators
        .iter()
        .map(|r| {
            Word::from_letters(
                r.letters()
                    .iter()
                    .map(|l| Letter::new(remap[l.gen as usize], l.inv)),
            )
        })
        .collect();
    Presentation {
        generators: new_gens,
        relators,
    }
}

/// Invariant factors of the abelianized group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub rank: usize,
    /// Torsion coefficients d1 | d2 | ..., each > 1.
    pub torsion: Vec<BigInt>,
}

/// Abelianization via exact-integer Smith normal form of the relator
/// exponent matrix.
pub fn abelianization(pres: &Presentation) -> AbelianInvariants {
    let n = pres.rank();
    let mut rows: Vec<Vec<BigInt>> = pres
        .relators
        .iter()
        .map(|r| r.abelianized(n).into_iter().map(BigInt::from).collect())
        .collect();
    if rows.is_empty() {
        rows.push(vec![BigInt::zero(); n]);
    }
    let diag = smith_diagonal(&mut rows, n);
    let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianInvariants {
        rank: n - nonzero,
        torsion: diag
            .into_iter()
            .filter(|d| !d.is_zero() && *d != BigInt::from(1))
            .collect(),
    }
}

/// Diagonal of the Smith normal form, computed by elementary row/column
/// operations with the minimal nonzero |entry| as pivot.
#[allow(clippy::needless_range_loop)]
fn smith_diagonal(m: &mut [Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        // Pivot: minimal nonzero absolute value in the trailing submatrix.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !m[i][j].is_zero()
                    && pivot.is_none_or(|(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }

        let mut clean = true;
        for i in k + 1..rows {
            if !m[i][k].is_zero() {
                let q = &m[i][k] / &m[k][k];
                for j in k..cols {
                    let delta = &q * &m[k][j];
                    m[i][j] -= delta;
                }
                if !m[i][k].is_zero() {
                    clean = false;
                }
            }
        }
        for j in k + 1..cols {
            if !m[k][j].is_zero() {
                let q = &m[k][j] / &m[k][k];
                for row in m.iter_mut().skip(k) {
                    let delta = &q * &row[k];
                    row[j] -= delta;
                }
                if !m[k][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }

        // Divisibility: fold in any entry the pivot does not divide yet.
        let mut fixed = false;
        'outer: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&m[i][j] % &m[k][k]).is_zero() {
                    let row = m[i].clone();
                    for (jj, v) in row.into_iter().enumerate() {
                        m[k][jj] += v;
                    }
                    fixed = true;
                    break 'outer;
                }
            }
        }
        if fixed {
            continue;
        }

        diag.push(m[k][k].abs());
        k += 1;
    }
    diag
}

/// A finite group as a multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    pub name: String,
    mul: Vec<Vec<u16>>,
    inv: Vec<u16>,
    identity: u16,
}

impl FiniteGroupTable {
    fn from_mul(name: &str, mul: Vec<Vec<u16>>) -> Self {
        let n = mul.len();
        let identity = (0..n as u16)
            .find(|&e| (0..n as u16).all(|x| mul[e as usize][x as usize] == x))
            .expect("group table has an identity");
        let inv = (0..n as u16)
            .map(|x| {
                (0..n as u16)
                    .find(|&y| mul[x as usize][y as usize] == identity)
                    .expect("group table has inverses")
            })
            .collect();
        let table = Self {
            name: name.to_string(),
            mul,
            inv,
            identity,
        };
        table.check_associativity();
        table
    }

    fn check_associativity(&self) {
        let n = self.order();
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                for c in 0..n as u16 {
                    assert_eq!(
                        self.mul(self.mul(a, b), c),
                        self.mul(a, self.mul(b, c)),
                        "non-associative table {}",
                        self.name
                    );
                }
            }
        }
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize][b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn identity(&self) -> u16 {
        self.identity
    }

    fn from_permutations(name: &str, perms: Vec<Vec<u8>>) -> Self {
        let index: BTreeMap<Vec<u8>, u16> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u16))
            .collect();
        let mul = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        // (a*b)(x) = a(b(x))
                        let composed: Vec<u8> = (0..a.len()).map(|x| a[b[x] as usize]).collect();
                        index[&composed]
                    })
                    .collect()
            })
            .collect();
        Self::from_mul(name, mul)
    }

    /// Symmetric group on n letters, n <= 5.
    pub fn symmetric(n: usize) -> Self {
        Self::from_permutations(&format!("S{n}"), permutations(n))
    }

    /// Alternating group on n letters.
    pub fn alternating(n: usize) -> Self {
        let perms = permutations(n)
            .into_iter()
            .filter(|p| permutation_sign(p) == 1)
            .collect();
        Self::from_permutations(&format!("A{n}"), perms)
    }

    /// Dihedral group of the n-gon, order 2n.
    pub fn dihedral(n: usize) -> Self {
        let mut perms = Vec::new();
        for r in 0..n {
            perms.push((0..n).map(|i| ((i + r) % n) as u8).collect::<Vec<_>>());
        }
        for r in 0..n {
            perms.push((0..n).map(|i| ((n + r - i) % n) as u8).collect::<Vec<_>>());
        }
        Self::from_permutations(&format!("D{n}"), perms)
    }

    /// Cyclic group of order n.
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u16).collect())
            .collect();
        Self::from_mul(&format!("Z{n}"), mul)
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "S3" => Some(Self::symmetric(3)),
            "S4" => Some(Self::symmetric(4)),
            "A4" => Some(Self::alternating(4)),
            "D4" => Some(Self::dihedral(4)),
            other => other
                .strip_prefix('Z')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| (1..=64).contains(&n))
                .map(Self::cyclic),
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for x in 0..n as u8 {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn permutation_sign(p: &[u8]) -> i8 {
    let mut sign = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Default ceiling on |G|^generators for homomorphism counting.
pub const HOM_CEILING: f64 = 1e8;

/// Counts tuples of generator images satisfying all relators, by
/// backtracking with relators checked as soon as their support is assigned.
pub fn count_homs(pres: &Presentation, table: &FiniteGroupTable) -> Result<u64, Error> {
    count_homs_with_ceiling(pres, table, HOM_CEILING)
}

pub fn count_homs_with_ceiling(
    pres: &Presentation,
    table: &FiniteGroupTable,
    ceiling: f64,
) -> Result<u64, Error> {
    let n_gens = pres.rank();
    let tuples = (table.order() as f64).powi(n_gens as i32);
    if tuples > ceiling {
        return Err(Error::SearchSpaceTooLarge { tuples, ceiling });
    }
    // Relators become checkable once their highest generator is assigned.
    let mut by_depth: Vec<Vec<&Word>> = vec![Vec::new(); n_gens + 1];
    for r in &pres.relators {
        let depth = r
            .letters()
            .iter()
            .map(|l| l.gen as usize + 1)
            .max()
            .unwrap_or(0);
        by_depth[depth].push(r);
    }
    if by_depth[0].iter().any(|r| !r.is_empty()) {
        // A nonempty relator with no letters cannot happen; guard anyway.
        return Ok(0);
    }

    let order = table.order() as u16;
    let mut images = vec![0u16; n_gens];
    let mut count = 0u64;
    fn eval(table: &FiniteGroupTable, images: &[u16], w: &Word) -> u16 {
        let mut acc = table.identity();
        for l in w.letters() {
            let g = images[l.gen as usize];
            let g = if l.inv { table.inv(g) } else { g };
            acc = table.mul(acc, g);
        }
        acc
    }
    fn go(
        table: &FiniteGroupTable,
        by_depth: &[Vec<&Word>],
        images: &mut [u16],
        depth: usize,
        order: u16,
        count: &mut u64,
    ) {
        if depth == images.len() {
            *count += 1;
            return;
        }
        for g in 0..order {
            images[depth] = g;
            if by_depth[depth + 1]
                .iter()
                .all(|r| eval(table, images, r) == table.identity())
            {
                go(table, by_depth, images, depth + 1, order, count);
            }
        }
    }
    go(table, &by_depth, &mut images, 0, order, &mut count);
    Ok(count)
}

/// The invariant record used to compare presentations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub abelian: AbelianInvariants,
    /// (group name, homomorphism count) per probe group.
    pub homs: Vec<(String, u64)>,
}

/// The probe family used for acceptance-level group comparison.
pub fn standard_probe_groups() -> Vec<FiniteGroupTable> {
    vec![
        FiniteGroupTable::symmetric(3),
        FiniteGroupTable::symmetric(4),
        FiniteGroupTable::alternating(4),
        FiniteGroupTable::dihedral(4),
        FiniteGroupTable::cyclic(2),
        FiniteGroupTable::cyclic(3),
    ]
}

/// Abelian invariants plus hom counts into the given groups.
pub fn fingerprint(pres: &Presentation, groups: &[FiniteGroupTable]) -> Result<Fingerprint, Error> {
    let abelian = abelianization(pres);
    let mut homs = Vec::with_capacity(groups.len());
    for g in groups {
        homs.push((g.name.clone(), count_homs(pres, g)?));
    }
    Ok(Fingerprint { abelian, homs })
}

/// Simplifies first, then fingerprints against the standard probe family.
/// This is the comparison used by the acceptance checks.
pub fn standard_fingerprint(pres: &Presentation) -> Result<Fingerprint, Error> {
    let simplified = tietze_simplify(pres, 64);
    fingerprint(&simplified, &standard_probe_groups())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z2_presentation() -> Presentation {
        Presentation::parse(&["x", "y"], &["x y x^-1 y^-1"]).unwrap()
    }

    fn trefoil_presentation() -> Presentation {
        Presentation::parse(&["x", "y"], &["x y x y^-1 x^-1 y^-1"]).unwrap()
    }

    #[test]
    fn free_reduction() {
        let w = Word::from_letters([
            Letter::new(0, false),
            Letter::new(1, false),
            Letter::new(1, true),
            Letter::new(0, true),
        ]);
        assert!(w.is_empty());
    }

    #[test]
    fn tietze_eliminates_redundant_generator() {
        let p = Presentation::parse(&["x", "y"], &["x y^-1"]).unwrap();
        let q = tietze_simplify(&p, 16);
        assert_eq!(q.rank(), 1);
        assert!(q.relators.is_empty());
    }

    #[test]
    fn tietze_keeps_free_group_with_empty_relator() {
        let p = Presentation::new(vec!["x".into()], vec![Word::empty()]).unwrap();
        let q = tietze_simplify(&p, 16);
        assert_eq!(q.rank(), 1);
        assert!(q.relators.is_empty());
    }

    #[test]
    fn abelianization_examples() {
        let ab = abelianization(&z2_presentation());
        assert_eq!(ab.rank, 2);
        assert!(ab.torsion.is_empty());

        // x y x = y x y abelianizes to the 1x2 matrix (1, -1).
        let ab = abelianization(&trefoil_presentation());
        assert_eq!(ab.rank, 1);
        assert!(ab.torsion.is_empty());

        let p = Presentation::parse(&["x"], &["x^3"]).unwrap();
        let ab = abelianization(&p);
        assert_eq!(ab.rank, 0);
        assert_eq!(ab.torsion, vec![BigInt::from(3)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let p = Presentation::parse(&["x", "y"], &["x^2", "y^2 x^2"]).unwrap();
        let ab = abelianization(&p);
        assert_eq!(ab.rank, 0);
        assert_eq!(ab.torsion, vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn hom_counts() {
        let s3 = FiniteGroupTable::symmetric(3);
        // Free group of rank r maps |G|^r ways.
        assert_eq!(count_homs(&Presentation::free(2), &s3).unwrap(), 36);
        // Commuting pairs in S3.
        assert_eq!(count_homs(&z2_presentation(), &s3).unwrap(), 18);
        // Trefoil oracle: brute force over all 36 pairs.
        let mut oracle = 0;
        for a in 0..6u16 {
            for b in 0..6u16 {
                let aba = s3.mul(s3.mul(a, b), a);
                let bab = s3.mul(s3.mul(b, a), b);
                if aba == bab {
                    oracle += 1;
                }
            }
        }
        assert_eq!(
            count_homs(&trefoil_presentation(), &s3).unwrap(),
            oracle
        );
        // The trefoil group is not Z.
        let z = Presentation::free(1);
        assert_ne!(
            count_homs(&trefoil_presentation(), &s3).unwrap(),
            count_homs(&z, &s3).unwrap() * 6 // padding to equal rank is beside the point
        );
    }

    #[test]
    fn ceiling_enforced() {
        let p = Presentation::free(12);
        let s4 = FiniteGroupTable::symmetric(4);
        assert!(matches!(
            count_homs(&p, &s4),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn group_tables_sane() {
        for g in standard_probe_groups() {
            let n = g.order();
            assert!((1..=24).contains(&n));
            for a in 0..n as u16 {
                assert_eq!(g.mul(a, g.inv(a)), g.identity());
                assert_eq!(g.mul(g.identity(), a), a);
            }
        }
        assert_eq!(FiniteGroupTable::alternating(4).order(), 12);
        assert_eq!(FiniteGroupTable::dihedral(4).order(), 8);
        assert_eq!(FiniteGroupTable::by_name("Z6").unwrap().order(), 6);
    }

    #[test]
    fn fingerprints_identify_z2_presentations() {
        let a = z2_presentation();
        let b = Presentation::parse(&["a", "b", "c"], &["a b a^-1 b^-1", "c"]).unwrap();
        assert_eq!(
            standard_fingerprint(&a).unwrap(),
            standard_fingerprint(&b).unwrap()
        );
        let free2 = Presentation::free(2);
        assert_ne!(
            standard_fingerprint(&a).unwrap(),
            standard_fingerprint(&free2).unwrap()
        );
    }

    #[test]
    fn fingerprint_ignores_generator_order() {
        let a = trefoil_presentation();
        let b = Presentation::parse(&["y", "x"], &["y x y x^-1 y^-1 x^-1"]).unwrap();
        assert_eq!(
            standard_fingerprint(&a).unwrap(),
            standard_fingerprint(&b).unwrap()
        );
    }

    proptest! {
        #[test]
        fn words_reduce_to_normal_form(letters in proptest::collection::vec((0u32..4, any::<bool>()), 0..40)) {
            let w = Word::from_letters(letters.iter().map(|&(g, i)| Letter::new(g, i)));
            // No adjacent inverse pair survives.
            for pair in w.letters().windows(2) {
                prop_assert!(pair[0] != pair[1].inverse());
            }
            // Inverse concatenation cancels completely.
            prop_assert!(w.clone().concat(&w.inverse()).is_empty());
        }

        #[test]
        fn count_homs_invariant_under_cycling_and_inversion(
            letters in proptest::collection::vec((0u32..2, any::<bool>()), 1..10),
            rot in 0usize..10,
        ) {
            let w = Word::from_letters(letters.iter().map(|&(g, i)| Letter::new(g, i)));
            prop_assume!(!w.is_empty());
            let n = w.len();
            let rotated = Word::from_letters((0..n).map(|i| w.letters()[(i + rot % n) % n]));
            let gens = vec!["x".to_string(), "y".to_string()];
            let p1 = Presentation::new(gens.clone(), vec![w.clone()]).unwrap();
            let p2 = Presentation::new(gens.clone(), vec![rotated]).unwrap();
            let p3 = Presentation::new(gens, vec![w.inverse()]).unwrap();
            let s3 = FiniteGroupTable::symmetric(3);
            let c1 = count_homs(&p1, &s3).unwrap();
            prop_assert_eq!(c1, count_homs(&p2, &s3).unwrap());
            prop_assert_eq!(c1, count_homs(&p3, &s3).unwrap());
        }

        #[test]
        fn abelianization_unchanged_by_adding_commutators(
            relator_spec in proptest::collection::vec((0u32..3, any::<bool>()), 0..12)
        ) {
            let w = Word::from_letters(relator_spec.iter().map(|&(g, i)| Letter::new(g, i)));
            let gens = vec!["a".to_string(), "b".to_string(), "c".to_string()];
            let base = Presentation::new(gens.clone(), vec![w.clone()]).unwrap();
            let mut relators = vec![w];
            for i in 0..3u32 {
                for j in 0..3u32 {
                    let comm = Word::letter(i, false)
                        .concat(&Word::letter(j, false))
                        .concat(&Word::letter(i, true))
                        .concat(&Word::letter(j, true));
                    relators.push(comm);
                }
            }
            let with_comms = Presentation::new(gens, relators).unwrap();
            prop_assert_eq!(abelianization(&base), abelianization(&with_comms));
        }

        #[test]
        fn tietze_preserves_fingerprints(
            relators in proptest::collection::vec(
                proptest::collection::vec((0u32..3, any::<bool>()), 0..8),
                0..4,
            )
        ) {
            let gens = vec!["a".to_string(), "b".to_string(), "c".to_string()];
            let words: Vec<Word> = relators
                .iter()
                .map(|r| Word::from_letters(r.iter().map(|&(g, i)| Letter::new(g, i))))
                .collect();
            let p = Presentation::new(gens, words).unwrap();
            let q = tietze_simplify(&p, 32);
            let probes = vec![FiniteGroupTable::symmetric(3), FiniteGroupTable::cyclic(4)];
            prop_assert_eq!(
                fingerprint(&p, &probes).unwrap(),
                fingerprint(&q, &probes).unwrap()
            );
        }
    }
}
