//! Finite constructive interpretations.
//!
//! An [`Interpretation`] is a finite set of entities with a refinement
//! preorder (stored as generators plus the computed reflexive-transitive
//! closure), role relations, an atomic valuation and a nominal map. Entity
//! sets are bitsets, so models are limited to [`MAX_ENTITIES`] entities.

mod enumerate;
mod eval;
mod ikm;
mod lint;
mod random;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::syntax::{Concept, Sequent, Statement};

pub use enumerate::{
    find_countermodel, preorders_up_to_iso, CountermodelSearch, ModelSpace, Signature,
    DEFAULT_ENTITY_CAP, HARD_ENTITY_CAP,
};
pub use ikm::{load_model, parse_model, write_model, ModelFileError};
pub use lint::{check_frame_conditions, Condition, LintReport, Violation};
pub use random::ModelSampler;

pub const MAX_ENTITIES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("nominal `{0}` is not mapped to any entity")]
    UnmappedNominal(String),
    #[error("unknown entity `{0}`")]
    UnknownEntity(String),
    #[error("entity `{0}` declared twice")]
    DuplicateEntity(String),
    #[error("models are limited to {MAX_ENTITIES} entities")]
    TooManyEntities,
    #[error("requested {requested} entities but the enumeration cap is {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// A set of entities, by index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntitySet(pub u64);

impl EntitySet {
    pub const EMPTY: EntitySet = EntitySet(0);

    pub fn full(n: usize) -> Self {
        EntitySet(full_mask(n))
    }

    pub fn singleton(i: usize) -> Self {
        EntitySet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: EntitySet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Reflexive-transitive closure of `generators` over `n` entities, as rows
/// `up[i] = { j | i ⪯ j }`.
pub(crate) fn closure(n: usize, generators: &[(usize, usize)]) -> Vec<u64> {
    let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for &(a, b) in generators {
        up[a] |= 1 << b;
    }
    // Warshall
    for k in 0..n {
        for i in 0..n {
            if up[i] >> k & 1 == 1 {
                up[i] |= up[k];
            }
        }
    }
    up
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpretation {
    entities: Vec<String>,
    generators: Vec<(usize, usize)>,
    up: Vec<u64>,
    roles: BTreeMap<String, Vec<u64>>,
    atoms: BTreeMap<String, u64>,
    nominals: BTreeMap<String, usize>,
}

impl Interpretation {
    pub fn new() -> Self {
        Interpretation {
            entities: Vec::new(),
            generators: Vec::new(),
            up: Vec::new(),
            roles: BTreeMap::new(),
            atoms: BTreeMap::new(),
            nominals: BTreeMap::new(),
        }
    }

    /// Builds an interpretation whose preorder is stored as given, without
    /// closing it. Used to exercise the REFL/TRANS lint.
    pub fn with_raw_preorder(entities: Vec<String>, up: Vec<EntitySet>) -> Self {
        assert_eq!(entities.len(), up.len());
        Interpretation {
            generators: Vec::new(),
            up: up.into_iter().map(|s| s.0).collect(),
            entities,
            roles: BTreeMap::new(),
            atoms: BTreeMap::new(),
            nominals: BTreeMap::new(),
        }
    }

    pub fn add_entity(&mut self, name: impl Into<String>) -> Result<usize, SemanticsError> {
        let name = name.into();
        if self.entities.contains(&name) {
            return Err(SemanticsError::DuplicateEntity(name));
        }
        if self.entities.len() == MAX_ENTITIES {
            return Err(SemanticsError::TooManyEntities);
        }
        let i = self.entities.len();
        self.entities.push(name);
        self.up.push(1 << i);
        for rel in self.roles.values_mut() {
            rel.push(0);
        }
        Ok(i)
    }

    /// Adds the generator `a ⪯ b` and recomputes the closure.
    pub fn add_precedence(&mut self, a: &str, b: &str) -> Result<(), SemanticsError> {
        let (a, b) = (self.require(a)?, self.require(b)?);
        self.generators.push((a, b));
        self.up = closure(self.entities.len(), &self.generators);
        Ok(())
    }

    pub fn remove_precedence(&mut self, a: &str, b: &str) -> Result<bool, SemanticsError> {
        let (a, b) = (self.require(a)?, self.require(b)?);
        let before = self.generators.len();
        self.generators.retain(|&g| g != (a, b));
        self.up = closure(self.entities.len(), &self.generators);
        Ok(self.generators.len() != before)
    }

    pub fn add_role_pair(&mut self, role: &str, a: &str, b: &str) -> Result<(), SemanticsError> {
        let (a, b) = (self.require(a)?, self.require(b)?);
        let n = self.entities.len();
        let rel = self.roles.entry(role.to_string()).or_insert_with(|| vec![0; n]);
        rel[a] |= 1 << b;
        Ok(())
    }

    pub fn add_atom_fact(&mut self, atom: &str, e: &str) -> Result<(), SemanticsError> {
        let e = self.require(e)?;
        *self.atoms.entry(atom.to_string()).or_insert(0) |= 1 << e;
        Ok(())
    }

    pub fn set_atom(&mut self, atom: &str, set: EntitySet) {
        if set.is_empty() {
            self.atoms.remove(atom);
        } else {
            self.atoms.insert(atom.to_string(), set.0);
        }
    }

    pub fn set_nominal(&mut self, nominal: &str, e: &str) -> Result<(), SemanticsError> {
        let e = self.require(e)?;
        self.nominals.insert(nominal.to_string(), e);
        Ok(())
    }

    fn require(&self, name: &str) -> Result<usize, SemanticsError> {
        self.entity_index(name).ok_or_else(|| SemanticsError::UnknownEntity(name.to_string()))
    }

    pub fn len(&self) -> usize {
        self.entities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entities.is_empty()
    }

    pub fn entities(&self) -> &[String] {
        &self.entities
    }

    pub fn entity_index(&self, name: &str) -> Option<usize> {
        self.entities.iter().position(|e| e == name)
    }

    pub fn all(&self) -> EntitySet {
        EntitySet::full(self.entities.len())
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, &str)> {
        self.generators.iter().map(|&(a, b)| (self.entities[a].as_str(), self.entities[b].as_str()))
    }

    /// `{ j | i ⪯ j }` in the stored preorder.
    pub fn refinements(&self, i: usize) -> EntitySet {
        EntitySet(self.up[i])
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.up[a] >> b & 1 == 1
    }

    pub fn role_names(&self) -> impl Iterator<Item = &str> {
        self.roles.keys().map(String::as_str)
    }

    pub fn successors(&self, role: &str, i: usize) -> EntitySet {
        EntitySet(self.roles.get(role).map_or(0, |rel| rel[i]))
    }

    pub fn role_pairs(&self, role: &str) -> Vec<(usize, usize)> {
        let Some(rel) = self.roles.get(role) else { return Vec::new() };
        rel.iter()
            .enumerate()
            .flat_map(|(i, &row)| EntitySet(row).iter().map(move |j| (i, j)))
            .collect()
    }

    pub fn atom_names(&self) -> impl Iterator<Item = &str> {
        self.atoms.keys().map(String::as_str)
    }

    /// The stored valuation; unknown atoms are empty.
    pub fn atom(&self, atom: &str) -> EntitySet {
        EntitySet(self.atoms.get(atom).copied().unwrap_or(0))
    }

    pub fn nominals(&self) -> impl Iterator<Item = (&str, usize)> {
        self.nominals.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn nominal(&self, name: &str) -> Result<usize, SemanticsError> {
        self.nominals.get(name).copied().ok_or_else(|| SemanticsError::UnmappedNominal(name.to_string()))
    }

    pub fn names_of(&self, set: EntitySet) -> Vec<&str> {
        set.iter().map(|i| self.entities[i].as_str()).collect()
    }

    /// Least extension of the valuation that is closed under refinement.
    pub fn hereditary_closure(&self) -> Interpretation {
        let mut out = self.clone();
        for set in out.atoms.values_mut() {
            *set = up_closure(&out.up, *set);
        }
        out
    }

    pub fn eval_concept(&self, c: &Concept) -> EntitySet {
        eval::concept_in(self, c)
    }

    /// Truth of a statement in the model. Nominal and role assertions are
    /// world-independent. A bare concept holds iff its extension is every
    /// entity.
    pub fn satisfies(&self, s: &Statement) -> Result<bool, SemanticsError> {
        eval::statement_in(self, s)
    }

    /// Whether `s` holds at entity `w`.
    pub fn holds_at(&self, s: &Statement, w: usize) -> Result<bool, SemanticsError> {
        eval::statement_at(self, s, w)
    }

    /// Sequent validity on this model: if every TBox subsumption has full
    /// extension, then at every entity where the antecedent holds, the
    /// succedent holds.
    pub fn sequent_valid(&self, s: &Sequent) -> Result<bool, SemanticsError> {
        eval::sequent_in(self, s)
    }

    pub(crate) fn up_rows(&self) -> &[u64] {
        &self.up
    }

    pub(crate) fn raw_atoms(&self) -> &BTreeMap<String, u64> {
        &self.atoms
    }

    pub(crate) fn raw_roles(&self) -> &BTreeMap<String, Vec<u64>> {
        &self.roles
    }
}

impl Default for Interpretation {
    fn default() -> Self {
        Interpretation::new()
    }
}

pub(crate) fn up_closure(up: &[u64], set: u64) -> u64 {
    EntitySet(set).iter().fold(set, |acc, i| acc | up[i])
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_model(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_concept, parse_sequent, parse_statement};

    fn chain(a_at: &[&str]) -> Interpretation {
        let mut m = Interpretation::new();
        m.add_entity("w0").unwrap();
        m.add_entity("w1").unwrap();
        m.add_precedence("w0", "w1").unwrap();
        for e in a_at {
            m.add_atom_fact("A", e).unwrap();
        }
        m.set_nominal("x", "w0").unwrap();
        m
    }

    #[test]
    fn closure_of_chain() {
        let m = chain(&["w0"]).hereditary_closure();
        assert_eq!(m.names_of(m.atom("A")), ["w0", "w1"]);
        assert_eq!(m.hereditary_closure(), m);
    }

    #[test]
    fn excluded_middle_fails_at_root_of_chain() {
        let m = chain(&["w1"]);
        let ext = m.eval_concept(&parse_concept("A or not A").unwrap());
        assert_eq!(m.names_of(ext), ["w1"]);
        assert!(m.satisfies(&parse_statement("x : not (not A)").unwrap()).unwrap());
        assert!(!m.satisfies(&parse_statement("x : A").unwrap()).unwrap());
        assert!(!m.sequent_valid(&parse_sequent("|- x : (A or not A)").unwrap()).unwrap());
        assert!(m.sequent_valid(&parse_sequent("A |- A").unwrap()).unwrap());
    }

    #[test]
    fn unknown_atoms_are_empty_and_unmapped_nominals_error() {
        let m = chain(&[]);
        assert!(m.eval_concept(&parse_concept("Zed").unwrap()).is_empty());
        assert!(m.eval_concept(&parse_concept("some Q.Top").unwrap()).is_empty());
        assert_eq!(m.eval_concept(&parse_concept("all Q.Bot").unwrap()), m.all());
        let err = m.satisfies(&parse_statement("y : Top").unwrap()).unwrap_err();
        assert_eq!(err, SemanticsError::UnmappedNominal("y".into()));
    }

    #[test]
    fn bitset_basics() {
        let s = EntitySet(0b1011);
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 1, 3]);
        assert_eq!(s.len(), 3);
        assert!(EntitySet(0b11).is_subset(s));
        assert_eq!(EntitySet::full(3), EntitySet(0b111));
    }
}
