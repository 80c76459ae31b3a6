//! Exhaustive enumeration of linted interpretations over a finite signature.
//!
//! Canonical order: entity count ascending; preorders up to isomorphism in
//! ascending code order (one representative per class, the one with the
//! least code under relabeling); then hereditary valuations, F1/F2-respecting
//! role relations and nominal maps, each lexicographically. Work is split
//! per preorder and merged with `find_map_first`, so parallel runs return the
//! same witness as a sequential scan.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::eval::{compile_sequent, Symbols, View};
use super::{full_mask, EntitySet, Interpretation, SemanticsError};
use crate::syntax::{Concept, Sequent, Statement};

pub const DEFAULT_ENTITY_CAP: usize = 4;
/// Beyond five entities the preorder and role enumerations stop being cheap.
pub const HARD_ENTITY_CAP: usize = 5;

/// Atom, role and nominal names a model space ranges over. Sorted, deduplicated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub atoms: Vec<String>,
    pub roles: Vec<String>,
    pub nominals: Vec<String>,
}

fn sorted(names: impl IntoIterator<Item = String>) -> Vec<String> {
    names.into_iter().collect::<BTreeSet<_>>().into_iter().collect()
}

impl Signature {
    pub fn new<S: Into<String>>(
        atoms: impl IntoIterator<Item = S>,
        roles: impl IntoIterator<Item = S>,
        nominals: impl IntoIterator<Item = S>,
    ) -> Self {
        Signature {
            atoms: sorted(atoms.into_iter().map(Into::into)),
            roles: sorted(roles.into_iter().map(Into::into)),
            nominals: sorted(nominals.into_iter().map(Into::into)),
        }
    }

    pub fn of_sequent(s: &Sequent) -> Self {
        Signature {
            atoms: s.atoms().into_iter().collect(),
            roles: s.roles().into_iter().collect(),
            nominals: s.nominals().into_iter().collect(),
        }
    }

    pub fn of_concept(c: &Concept) -> Self {
        let (mut atoms, mut roles) = (BTreeSet::new(), BTreeSet::new());
        c.collect_atoms(&mut atoms);
        c.collect_roles(&mut roles);
        Signature { atoms: atoms.into_iter().collect(), roles: roles.into_iter().collect(), nominals: Vec::new() }
    }

    pub fn of_statements<'a>(items: impl IntoIterator<Item = &'a Statement>) -> Self {
        let (mut atoms, mut roles, mut nominals) = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
        for s in items {
            s.collect_atoms(&mut atoms);
            s.collect_roles(&mut roles);
            s.collect_nominals(&mut nominals);
        }
        Signature {
            atoms: atoms.into_iter().collect(),
            roles: roles.into_iter().collect(),
            nominals: nominals.into_iter().collect(),
        }
    }

    pub fn merge(&self, other: &Signature) -> Signature {
        Signature {
            atoms: sorted(self.atoms.iter().chain(&other.atoms).cloned()),
            roles: sorted(self.roles.iter().chain(&other.roles).cloned()),
            nominals: sorted(self.nominals.iter().chain(&other.nominals).cloned()),
        }
    }
}

impl Symbols for Signature {
    fn atom(&self, name: &str) -> Option<usize> {
        self.atoms.binary_search_by(|a| a.as_str().cmp(name)).ok()
    }

    fn role(&self, name: &str) -> Option<usize> {
        self.roles.binary_search_by(|a| a.as_str().cmp(name)).ok()
    }

    fn nominal(&self, name: &str) -> Result<usize, SemanticsError> {
        self.nominals
            .binary_search_by(|a| a.as_str().cmp(name))
            .map_err(|_| SemanticsError::UnmappedNominal(name.to_string()))
    }
}

/// Off-diagonal pairs in lexicographic order; bit k of a preorder code is the k-th pair.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

fn rows_of(n: usize, code: u64, pairs: &[(usize, usize)]) -> Vec<u64> {
    let mut up: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if code >> k & 1 == 1 {
            up[i] |= 1 << j;
        }
    }
    up
}

fn transitive(up: &[u64]) -> bool {
    up.iter().all(|&row| EntitySet(row).iter().all(|j| up[j] & !row == 0))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

struct Preorders {
    labeled: Vec<Vec<u64>>,
    canonical: Vec<Vec<u64>>,
}

fn compute_preorders(n: usize) -> Preorders {
    let ps = pairs(n);
    let index = |i: usize, j: usize| ps.iter().position(|&p| p == (i, j)).unwrap();
    let perms = permutations(n);
    let mut labeled = Vec::new();
    let mut canonical = Vec::new();
    for code in 0u64..(1u64 << ps.len()) {
        let up = rows_of(n, code, &ps);
        if !transitive(&up) {
            continue;
        }
        let least = perms
            .iter()
            .map(|perm| {
                ps.iter()
                    .enumerate()
                    .filter(|&(k, _)| code >> k & 1 == 1)
                    .fold(0u64, |acc, (_, &(i, j))| acc | 1 << index(perm[i], perm[j]))
            })
            .min()
            .unwrap_or(code);
        if least == code {
            canonical.push(up.clone());
        }
        labeled.push(up);
    }
    Preorders { labeled, canonical }
}

fn preorders(n: usize) -> &'static Preorders {
    static CACHE: [OnceLock<Preorders>; HARD_ENTITY_CAP + 1] = [const { OnceLock::new() }; HARD_ENTITY_CAP + 1];
    assert!(n <= HARD_ENTITY_CAP);
    CACHE[n].get_or_init(|| compute_preorders(n))
}

/// One preorder (as refinement rows) per isomorphism class on `n` entities.
pub fn preorders_up_to_iso(n: usize) -> &'static [Vec<u64>] {
    &preorders(n).canonical
}

pub(crate) fn labeled_preorders(n: usize) -> &'static [Vec<u64>] {
    &preorders(n).labeled
}

/// All refinement-closed subsets, ascending.
pub(crate) fn up_sets(up: &[u64]) -> Vec<u64> {
    let n = up.len();
    (0..=full_mask(n)).filter(|&s| EntitySet(s).iter().all(|i| up[i] & !s == 0)).collect()
}

pub(crate) fn satisfies_f1_f2(up: &[u64], succ: &[u64]) -> bool {
    let n = up.len();
    (0..n).all(|w| {
        let f1 = EntitySet(up[w])
            .iter()
            .all(|w2| EntitySet(succ[w]).iter().all(|v| succ[w2] & up[v] != 0));
        let f2 = EntitySet(succ[w]).iter().all(|v| {
            EntitySet(up[v]).iter().all(|v2| EntitySet(up[w]).iter().any(|w2| succ[w2] >> v2 & 1 == 1))
        });
        f1 && f2
    })
}

/// All role relations satisfying F1 and F2, by ascending code (bit i*n+j = (i,j)).
pub(crate) fn role_relations(up: &[u64]) -> Vec<Vec<u64>> {
    let n = up.len();
    let cells = n * n;
    let row_mask = full_mask(n);
    (0u64..(1u64 << cells))
        .map(|code| (0..n).map(|i| code >> (i * n) & row_mask).collect::<Vec<u64>>())
        .filter(|succ| satisfies_f1_f2(up, succ))
        .collect()
}

/// The linted interpretations over a signature with at most `max_entities` entities.
#[derive(Clone, Debug)]
pub struct ModelSpace {
    sig: Signature,
    max_entities: usize,
}

struct Unit {
    n: usize,
    up: Vec<u64>,
    valuations: Vec<u64>,
    relations: Vec<Vec<u64>>,
}

impl ModelSpace {
    pub fn new(sig: Signature, max_entities: usize) -> Result<Self, SemanticsError> {
        if max_entities > HARD_ENTITY_CAP {
            return Err(SemanticsError::CapExceeded { requested: max_entities, cap: HARD_ENTITY_CAP });
        }
        Ok(ModelSpace { sig, max_entities })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    fn units(&self) -> Vec<(usize, &'static Vec<u64>)> {
        (1..=self.max_entities).flat_map(|n| preorders_up_to_iso(n).iter().map(move |up| (n, up))).collect()
    }

    fn unit(&self, n: usize, up: &[u64]) -> Unit {
        Unit {
            n,
            up: up.to_vec(),
            valuations: up_sets(up),
            relations: if self.sig.roles.is_empty() { Vec::new() } else { role_relations(up) },
        }
    }

    /// Number of interpretations (including nominal maps) in the space.
    pub fn count(&self) -> u128 {
        self.units()
            .into_iter()
            .map(|(n, up)| {
                let u = self.unit(n, up);
                (u.valuations.len() as u128).pow(self.sig.atoms.len() as u32)
                    * (u.relations.len() as u128).pow(self.sig.roles.len() as u32)
                    * (n as u128).pow(self.sig.nominals.len() as u32)
            })
            .sum()
    }

    /// First interpretation in canonical order for which `f` yields a value.
    pub(crate) fn find_first<T: Send>(&self, f: impl Fn(&View<'_>) -> Option<T> + Sync) -> Option<T> {
        let units = self.units();
        units.par_iter().find_map_first(|&(n, up)| self.scan_unit(&self.unit(n, up), &f))
    }

    fn scan_unit<T>(&self, u: &Unit, f: &impl Fn(&View<'_>) -> Option<T>) -> Option<T> {
        let (na, nr, nn) = (self.sig.atoms.len(), self.sig.roles.len(), self.sig.nominals.len());
        let radices: Vec<usize> = std::iter::repeat_n(u.valuations.len(), na)
            .chain(std::iter::repeat_n(u.relations.len(), nr))
            .chain(std::iter::repeat_n(u.n, nn))
            .collect();
        if radices.contains(&0) {
            return None;
        }
        let mut digits = vec![0usize; radices.len()];
        let mut atoms: Vec<u64> = vec![u.valuations[0]; na];
        let mut roles: Vec<Vec<u64>> = (0..nr).map(|_| u.relations[0].clone()).collect();
        let mut nominals = vec![0usize; nn];
        loop {
            let view = View { n: u.n, up: &u.up, atoms: &atoms, roles: &roles, nominals: &nominals };
            if let Some(t) = f(&view) {
                return Some(t);
            }
            // odometer, last digit fastest
            let mut k = radices.len();
            loop {
                if k == 0 {
                    return None;
                }
                k -= 1;
                digits[k] += 1;
                let wrapped = digits[k] == radices[k];
                if wrapped {
                    digits[k] = 0;
                }
                if k < na {
                    atoms[k] = u.valuations[digits[k]];
                } else if k < na + nr {
                    roles[k - na] = u.relations[digits[k]].clone();
                } else {
                    nominals[k - na - nr] = digits[k];
                }
                if !wrapped {
                    break;
                }
            }
        }
    }

    pub(crate) fn materialize(&self, v: &View<'_>) -> Interpretation {
        let mut m = Interpretation::new();
        let names: Vec<String> = (0..v.n).map(|i| format!("w{i}")).collect();
        for name in &names {
            m.add_entity(name.clone()).expect("fresh entity names");
        }
        for i in 0..v.n {
            for j in EntitySet(v.up[i]).iter().filter(|&j| j != i) {
                m.add_precedence(&names[i], &names[j]).expect("known entities");
            }
        }
        for (r, role) in self.sig.roles.iter().enumerate() {
            for i in 0..v.n {
                for j in EntitySet(v.roles[r][i]).iter() {
                    m.add_role_pair(role, &names[i], &names[j]).expect("known entities");
                }
            }
        }
        for (a, atom) in self.sig.atoms.iter().enumerate() {
            m.set_atom(atom, EntitySet(v.atoms[a]));
        }
        for (x, nominal) in self.sig.nominals.iter().enumerate() {
            m.set_nominal(nominal, &names[v.nominals[x]]).expect("known entity");
        }
        m
    }

    /// First interpretation (in canonical order) on which `s` is not valid.
    pub fn countermodel(&self, s: &Sequent) -> Result<Option<Interpretation>, SemanticsError> {
        let sig = self.sig.merge(&Signature::of_sequent(s));
        let space = ModelSpace { sig, max_entities: self.max_entities };
        let compiled = compile_sequent(s, &space.sig)?;
        Ok(space.find_first(|v| (!v.sequent(&compiled)).then(|| space.materialize(v))))
    }

    /// Whether `s` is valid on every interpretation of the space.
    pub fn valid(&self, s: &Sequent) -> Result<bool, SemanticsError> {
        let sig = self.sig.merge(&Signature::of_sequent(s));
        let space = ModelSpace { sig, max_entities: self.max_entities };
        let compiled = compile_sequent(s, &space.sig)?;
        Ok(space.find_first(|v| (!v.sequent(&compiled)).then_some(())).is_none())
    }

    /// Runs `check` on every interpretation; returns the first one it rejects.
    pub fn find_violation(&self, check: impl Fn(&Interpretation) -> bool + Sync) -> Option<Interpretation> {
        self.find_first(|v| {
            let m = self.materialize(v);
            (!check(&m)).then_some(m)
        })
    }
}

/// Bounded countermodel search with a configurable entity cap.
#[derive(Clone, Copy, Debug)]
pub struct CountermodelSearch {
    pub cap: usize,
}

impl Default for CountermodelSearch {
    fn default() -> Self {
        CountermodelSearch { cap: DEFAULT_ENTITY_CAP }
    }
}

impl CountermodelSearch {
    pub fn with_cap(cap: usize) -> Result<Self, SemanticsError> {
        if cap > HARD_ENTITY_CAP {
            return Err(SemanticsError::CapExceeded { requested: cap, cap: HARD_ENTITY_CAP });
        }
        Ok(CountermodelSearch { cap })
    }

    pub fn find(
        &self,
        sig: &Signature,
        s: &Sequent,
        max_entities: usize,
    ) -> Result<Option<Interpretation>, SemanticsError> {
        if max_entities > self.cap {
            return Err(SemanticsError::CapExceeded { requested: max_entities, cap: self.cap });
        }
        ModelSpace::new(sig.clone(), max_entities)?.countermodel(s)
    }
}

/// Canonically least linted interpretation over `sig` (extended with the
/// sequent's own symbols) with at most `max_entities` entities falsifying `s`.
pub fn find_countermodel(
    sig: &Signature,
    s: &Sequent,
    max_entities: usize,
) -> Result<Option<Interpretation>, SemanticsError> {
    CountermodelSearch::default().find(sig, s, max_entities)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_sequent;

    #[test]
    fn preorder_counts() {
        // OEIS A000798 (labeled) and A001930 (unlabeled)
        let labeled: Vec<usize> = (1..=4).map(|n| labeled_preorders(n).len()).collect();
        let classes: Vec<usize> = (1..=4).map(|n| preorders_up_to_iso(n).len()).collect();
        assert_eq!(labeled, [1, 4, 29, 355]);
        assert_eq!(classes, [1, 3, 9, 33]);
    }

    #[test]
    fn two_chain_representative_points_up_from_zero() {
        let reps = preorders_up_to_iso(2);
        assert_eq!(reps[0], vec![0b01, 0b10]);
        assert_eq!(reps[1], vec![0b11, 0b10]);
    }

    #[test]
    fn excluded_middle_countermodel_is_the_two_chain() {
        let s = parse_sequent("|- x : (A or not A)").unwrap();
        let m = find_countermodel(&Signature::default(), &s, 2).unwrap().unwrap();
        assert_eq!(m.entities(), ["w0", "w1"]);
        assert!(m.precedes(0, 1) && !m.precedes(1, 0));
        assert_eq!(m.names_of(m.atom("A")), ["w1"]);
        assert_eq!(m.nominal("x").unwrap(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let s = parse_sequent("|- Top").unwrap();
        assert!(matches!(
            find_countermodel(&Signature::default(), &s, 5),
            Err(SemanticsError::CapExceeded { requested: 5, cap: 4 })
        ));
        assert!(CountermodelSearch::with_cap(6).is_err());
    }

    #[test]
    fn role_relations_respect_frames() {
        let up = &preorders_up_to_iso(2)[1];
        for rel in role_relations(up) {
            assert!(satisfies_f1_f2(up, &rel));
        }
        // on the discrete 2-frame every relation qualifies
        assert_eq!(role_relations(&preorders_up_to_iso(2)[0]).len(), 16);
    }
}
