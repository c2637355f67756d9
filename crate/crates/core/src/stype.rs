//! Boundary types of embeddings.
//!
//! The type of an embedding of `G_n` records, for every face that meets the
//! boundary `S_n`, the cyclic sequence of boundary vertices the face visits,
//! taken up to reversing all faces at once. Letters are boundary positions,
//! ordered `a < b < c < ...`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fascia::FasciaGraph;
use crate::rotation::{trace_faces, RotationSystem};

/// Nonempty cyclic word, stored as its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Vec<u8>);

impl CyclicWord {
    pub fn new(letters: Vec<u8>) -> Option<Self> {
        if letters.is_empty() {
            return None;
        }
        let n = letters.len();
        let best = (0..n)
            .min_by(|&i, &j| {
                (0..n)
                    .map(|k| letters[(i + k) % n])
                    .cmp((0..n).map(|k| letters[(j + k) % n]))
            })
            .expect("nonempty");
        let mut rotated = letters;
        rotated.rotate_left(best);
        Some(CyclicWord(rotated))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn reversed(&self) -> CyclicWord {
        let mut l = self.0.clone();
        l.reverse();
        CyclicWord::new(l).expect("nonempty")
    }
}

/// Multiset of cyclic words modulo simultaneous reversal, stored as the
/// smaller of (sorted words, sorted reversed words).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SType {
    words: Vec<CyclicWord>,
}

impl SType {
    /// Canonicalizes raw words as read along faces. Empty words are dropped.
    pub fn from_words(words: Vec<Vec<u8>>) -> Self {
        let mut forward: Vec<CyclicWord> = words.into_iter().filter_map(CyclicWord::new).collect();
        forward.sort();
        let mut backward: Vec<CyclicWord> = forward.iter().map(CyclicWord::reversed).collect();
        backward.sort();
        SType { words: forward.min(backward) }
    }

    pub fn words(&self) -> &[CyclicWord] {
        &self.words
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    /// Letter multiplicities indexed by boundary position.
    pub fn letter_counts(&self, boundary_size: usize) -> Vec<usize> {
        let mut counts = vec![0; boundary_size];
        for w in &self.words {
            for &l in w.letters() {
                counts[l as usize] += 1;
            }
        }
        counts
    }

    /// Byte string that is equal for two types exactly when the types are.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::new();
        for w in &self.words {
            key.extend_from_slice(w.letters());
            key.push(u8::MAX);
        }
        key
    }

    /// Parses `(ba)(abcd)(dcb)` with single-character labels.
    pub fn parse(text: &str, labels: &[String]) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidFamily(format!("type {text:?}: {reason}"));
        let mut words = Vec::new();
        let mut current: Option<Vec<u8>> = None;
        for ch in text.chars().filter(|c| !c.is_whitespace()) {
            match (ch, current.as_mut()) {
                ('(', None) => current = Some(Vec::new()),
                (')', Some(w)) => {
                    if w.is_empty() {
                        return Err(bad("empty word"));
                    }
                    words.push(current.take().expect("open word"));
                }
                (c, Some(w)) => {
                    let pos = labels
                        .iter()
                        .position(|l| l.chars().eq(std::iter::once(c)))
                        .ok_or_else(|| bad(&format!("unknown letter {c:?}")))?;
                    w.push(pos as u8);
                }
                _ => return Err(bad("unbalanced parentheses")),
            }
        }
        if current.is_some() {
            return Err(bad("unterminated word"));
        }
        Ok(SType::from_words(words))
    }

    pub fn display<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        TypeDisplay { stype: self, labels }
    }
}

struct TypeDisplay<'a> {
    stype: &'a SType,
    labels: &'a [String],
}

impl fmt::Display for TypeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.labels.iter().all(|l| l.chars().count() == 1) { "" } else { " " };
        for w in &self.stype.words {
            let letters: Vec<&str> = w
                .letters()
                .iter()
                .map(|&l| self.labels.get(l as usize).map_or("?", String::as_str))
                .collect();
            write!(f, "({})", letters.join(sep))?;
        }
        Ok(())
    }
}

/// Reads the boundary type of an embedding of `G_n`: one word per face that
/// meets `S_n`, one letter per visit in face-traversal order.
pub fn extract_stype(fg: &FasciaGraph, rot: &RotationSystem) -> Result<SType> {
    let faces = trace_faces(&fg.graph, rot)?;
    let words = faces
        .faces()
        .iter()
        .map(|face| {
            face.iter()
                .filter_map(|&d| fg.boundary_position(fg.graph.tail(d)).map(|p| p as u8))
                .collect::<Vec<u8>>()
        })
        .collect();
    Ok(SType::from_words(words))
}

/// The six boundary types of the doubly hexagonal chain, as conventionally
/// written: `(name, printed form)`.
pub const DOUBLY_HEX_TYPES: [(&str, &str); 6] = [
    ("τ0", "(ba)(abcd)(dcb)"),
    ("τ1", "(baabcd)(dcb)"),
    ("τ2", "(badcb)(abcd)"),
    ("τ3", "(ba)(abcddcb)"),
    ("τ4", "(baabcddcb)"),
    ("τ5", "(badcbabcd)"),
];

pub fn named_type_table() -> Vec<(String, SType)> {
    let labels: Vec<String> = ["a", "b", "c", "d"].map(String::from).to_vec();
    DOUBLY_HEX_TYPES
        .iter()
        .map(|&(name, printed)| {
            (name.to_string(), SType::parse(printed, &labels).expect("static type table"))
        })
        .collect()
}

/// Interned types with ids in first-seen order.
#[derive(Clone, Debug, Default)]
pub struct TypeRegistry {
    types: Vec<SType>,
    index: HashMap<Vec<u8>, usize>,
    names: Vec<Option<String>>,
}

impl TypeRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the id of `t` and whether it was newly added.
    pub fn intern(&mut self, t: SType) -> (usize, bool) {
        let key = t.canonical_key();
        if let Some(&id) = self.index.get(&key) {
            return (id, false);
        }
        let id = self.types.len();
        self.index.insert(key, id);
        self.types.push(t);
        self.names.push(None);
        (id, true)
    }

    pub fn id_of(&self, t: &SType) -> Option<usize> {
        self.index.get(&t.canonical_key()).copied()
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn get(&self, id: usize) -> &SType {
        &self.types[id]
    }

    pub fn types(&self) -> &[SType] {
        &self.types
    }

    /// Attaches display names by matching canonical keys.
    pub fn attach_names(&mut self, table: &[(String, SType)]) {
        for (name, t) in table {
            if let Some(id) = self.id_of(t) {
                self.names[id] = Some(name.clone());
            }
        }
    }

    /// Display name, or `T<id>` when no name is attached.
    pub fn name(&self, id: usize) -> String {
        self.names[id].clone().unwrap_or_else(|| format!("T{id}"))
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len()).map(|id| self.name(id)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fascia::{build_fasciagraph, doubly_hex_spec};
    use crate::rotation::{enumerate_embeddings, genus};

    fn labels() -> Vec<String> {
        ["a", "b", "c", "d"].map(String::from).to_vec()
    }

    fn ty(s: &str) -> SType {
        SType::parse(s, &labels()).unwrap()
    }

    #[test]
    fn inverse_has_the_same_key() {
        assert_eq!(ty("(ba)(abcd)(dcb)").canonical_key(), ty("(ab)(dcba)(bcd)").canonical_key());
    }

    #[test]
    fn single_letter_word() {
        let t = ty("(a)");
        assert_eq!(t.words(), &[CyclicWord(vec![0])]);
        assert_eq!(t.display(&labels()).to_string(), "(a)");
    }

    #[test]
    fn word_order_is_irrelevant() {
        assert_eq!(ty("(baabcd)(dcb)").canonical_key(), ty("(dcb)(baabcd)").canonical_key());
    }

    #[test]
    fn rotation_is_irrelevant_but_reversal_of_one_word_is_not() {
        assert_eq!(ty("(abcd)(ba)"), ty("(cdab)(ab)"));
        // Reversing one word but not the other is a different type.
        assert_ne!(ty("(abc)(abd)"), ty("(cba)(abd)"));
        assert_eq!(ty("(abc)(abd)"), ty("(cba)(dba)"));
    }

    #[test]
    fn type_table_shape() {
        let table = named_type_table();
        assert_eq!(table.len(), 6);
        for (_, t) in &table {
            assert_eq!(t.letter_counts(4), vec![2, 3, 2, 2]);
        }
        let words: Vec<usize> = table.iter().map(|(_, t)| t.word_count()).collect();
        assert_eq!(words, vec![3, 2, 2, 2, 1, 1]);
        for i in 0..6 {
            for j in i + 1..6 {
                assert_ne!(table[i].1.canonical_key(), table[j].1.canonical_key());
            }
        }
    }

    #[test]
    fn parse_errors() {
        for bad in ["(ab", "ab)", "()", "(ax)", "((a))"] {
            assert!(SType::parse(bad, &labels()).is_err(), "{bad}");
        }
    }

    #[test]
    fn d1_types_by_genus() {
        let d1 = build_fasciagraph(&doubly_hex_spec(), 1).unwrap();
        let table = named_type_table();
        let mut seen = Vec::new();
        enumerate_embeddings(&d1.graph, |r| {
            let g = genus(&d1.graph, r).unwrap();
            let t = extract_stype(&d1, r).unwrap();
            seen.push((g, t));
        })
        .unwrap();
        assert_eq!(seen.len(), 4);
        for (g, t) in seen {
            let expected = if g == 0 { &table[0].1 } else { &table[5].1 };
            assert_eq!(&t, expected, "genus {g}");
        }
    }

    #[test]
    fn registry_interns_in_first_seen_order() {
        let mut reg = TypeRegistry::new();
        assert_eq!(reg.intern(ty("(ba)(abcd)(dcb)")), (0, true));
        assert_eq!(reg.intern(ty("(badcbabcd)")), (1, true));
        assert_eq!(reg.intern(ty("(ab)(dcba)(bcd)")), (0, false));
        reg.attach_names(&named_type_table());
        assert_eq!(reg.names(), vec!["τ0", "τ5"]);
        reg.intern(ty("(a)(b)"));
        assert_eq!(reg.name(2), "T2");
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn reversing_all_words_keeps_the_key(
            words in prop::collection::vec(prop::collection::vec(0u8..4, 1..7), 1..4),
            rot in 0usize..7,
        ) {
            let reversed: Vec<Vec<u8>> = words
                .iter()
                .map(|w| {
                    let mut r = w.clone();
                    r.reverse();
                    let k = rot % r.len();
                    r.rotate_left(k);
                    r
                })
                .rev()
                .collect();
            prop_assert_eq!(
                SType::from_words(words).canonical_key(),
                SType::from_words(reversed).canonical_key()
            );
        }
    }
}
