//! Binary words and their translation to oriented paths.
//!
//! A word over `{>, <}` describes an oriented path `v0 v1 ... vk`: letter `i`
//! is `>` when `v(i) -> v(i+1)` and `<` when `v(i+1) -> v(i)`. Reading the same
//! path from the other end reverses the word and flips every letter, so each
//! oriented path has one or two words.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Digraph, OrientedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// `<`
    Bwd,
    /// `>`
    Fwd,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::Bwd, Letter::Fwd];

    pub fn flip(self) -> Letter {
        match self {
            Letter::Fwd => Letter::Bwd,
            Letter::Bwd => Letter::Fwd,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::Fwd => '>',
            Letter::Bwd => '<',
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Uses only one letter (vacuously true for the empty word).
    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word([self.0.as_slice(), other.0.as_slice()].concat())
    }

    pub fn pow(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// The word of the same path read from the other end.
    pub fn reverse_flip(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.flip()).collect())
    }

    /// All words of length `k`, in lexicographic order.
    pub fn all_of_length(k: usize) -> impl Iterator<Item = Word> {
        assert!(k < 64, "word length too large to enumerate");
        (0..1u64 << k).map(move |code| {
            Word(
                (0..k)
                    .map(|i| {
                        if code >> (k - 1 - i) & 1 == 1 {
                            Letter::Fwd
                        } else {
                            Letter::Bwd
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                '>' => Ok(Letter::Fwd),
                '<' => Ok(Letter::Bwd),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// True iff `a` occurs contiguously in `b`.
pub fn is_factor(a: &Word, b: &Word) -> bool {
    a.is_empty() || b.0.windows(a.len()).any(|w| w == a.letters())
}

/// The oriented path `t(w)` on `|w| + 1` vertices.
pub fn word_to_path(w: &Word) -> OrientedGraph {
    let arcs = w.letters().iter().enumerate().map(|(i, l)| match l {
        Letter::Fwd => (i, i + 1),
        Letter::Bwd => (i + 1, i),
    });
    OrientedGraph::new(w.len() + 1, arcs).expect("a word describes an oriented path")
}

/// The one or two words whose path is `p`.
pub fn path_to_word(p: &Digraph) -> Result<BTreeSet<Word>> {
    let n = p.n();
    if n == 0 {
        return Err(Error::NotAPath("no vertices".into()));
    }
    if !p.is_oriented() {
        return Err(Error::NotAPath("contains a symmetric pair".into()));
    }
    let g = p.underlying();
    if g.edge_count() != n - 1 || !g.is_connected() || (0..n).any(|u| g.degree(u) > 2) {
        return Err(Error::NotAPath("underlying graph is not a path".into()));
    }
    let start = (0..n).find(|&u| g.degree(u) <= 1).expect("a path has an end");
    let mut letters = Vec::with_capacity(n - 1);
    let (mut prev, mut cur) = (usize::MAX, start);
    while let Some(next) = g.neighbors(cur).find(|&v| v != prev) {
        letters.push(if p.has_arc(cur, next) {
            Letter::Fwd
        } else {
            Letter::Bwd
        });
        prev = cur;
        cur = next;
    }
    let w = Word(letters);
    Ok(BTreeSet::from([w.reverse_flip(), w]))
}

/// A finite set of nonempty forbidden factors, normalized so that no member
/// is a factor of another.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FactorSet {
    members: BTreeSet<Word>,
}

impl FactorSet {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let all: BTreeSet<Word> = words.into_iter().collect();
        if all.contains(&Word::empty()) {
            return Err(Error::EmptyWord);
        }
        let members = all
            .iter()
            .filter(|w| !all.iter().any(|a| a != *w && is_factor(a, w)))
            .cloned()
            .collect();
        Ok(FactorSet { members })
    }

    pub fn members(&self) -> &BTreeSet<Word> {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Length of the longest member (0 when empty).
    pub fn max_len(&self) -> usize {
        self.members.iter().map(Word::len).max().unwrap_or(0)
    }

    /// No member of the set occurs in `w`.
    pub fn admits(&self, w: &Word) -> bool {
        !self.members.iter().any(|a| is_factor(a, w))
    }
}

impl fmt::Display for FactorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

/// True iff `w` avoids every member of `a`.
pub fn is_a_free(w: &Word, a: &FactorSet) -> bool {
    a.admits(w)
}

/// Words of the members of `f` that are oriented paths.
///
/// Members that are not paths contribute nothing, and neither does a
/// single-vertex member: its only word is empty, which is not a valid factor.
pub fn forbidden_factor_set<'a, I, D>(f: I) -> FactorSet
where
    I: IntoIterator<Item = &'a D>,
    D: AsRef<Digraph> + 'a,
{
    let words = f
        .into_iter()
        .filter_map(|d| path_to_word(d.as_ref()).ok())
        .flatten()
        .filter(|w| !w.is_empty());
    FactorSet::new(words).expect("empty words were filtered out")
}

/// The `m` for which the language of `a`-free words is `m`-synchronizing: the
/// longest member length, or 1 for the empty set.
pub fn sync_bound(a: &FactorSet) -> usize {
    a.max_len().max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::is_isomorphic;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(words: &[&str]) -> FactorSet {
        FactorSet::new(words.iter().map(|s| w(s))).unwrap()
    }

    #[test]
    fn translation() {
        let p = word_to_path(&w(">>"));
        assert!(is_isomorphic(&p, &Digraph::directed_path(3)));
        assert!(p.has_arc(0, 1) && p.has_arc(1, 2));
        assert_eq!(word_to_path(&Word::empty()).n(), 1);
        let fb = word_to_path(&w("><"));
        assert!(fb.has_arc(0, 1) && fb.has_arc(2, 1));
    }

    #[test]
    fn inverse_translation() {
        assert_eq!(
            path_to_word(&Digraph::directed_path(3)).unwrap(),
            BTreeSet::from([w(">>"), w("<<")])
        );
        let fb = Digraph::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(path_to_word(&fb).unwrap(), BTreeSet::from([w("><")]));
        assert_eq!(
            path_to_word(&Digraph::empty(1)).unwrap(),
            BTreeSet::from([Word::empty()])
        );
        assert!(path_to_word(&Digraph::directed_cycle(3).unwrap()).is_err());
        assert!(path_to_word(&Digraph::digon()).is_err());
    }

    #[test]
    fn factors() {
        assert!(is_factor(&w("><"), &w(">><<")));
        assert!(is_factor(&Word::empty(), &w("<")));
        assert!(!is_factor(&w(">>"), &w("><><")));
    }

    #[test]
    fn bipartite_factor_set() {
        let f = [
            OrientedGraph::transitive_tournament(3),
            OrientedGraph::directed_cycle(3).unwrap(),
            OrientedGraph::directed_path(3),
        ];
        assert_eq!(forbidden_factor_set(&f), set(&[">>", "<<"]));
        assert!(forbidden_factor_set::<_, OrientedGraph>(&[]).is_empty());
        assert_eq!(
            forbidden_factor_set(&[OrientedGraph::single_arc()]),
            set(&[">", "<"])
        );
    }

    #[test]
    fn freeness_and_sync_bound() {
        let a = set(&[">>", "<<"]);
        assert!(is_a_free(&w("><><"), &a));
        assert!(!is_a_free(&w(">><"), &a));
        assert!(is_a_free(&Word::empty(), &a));
        assert_eq!(sync_bound(&a), 2);
        assert_eq!(sync_bound(&FactorSet::default()), 1);
        assert_eq!(sync_bound(&set(&[">>>", "<<"])), 3);
    }

    #[test]
    fn normalization_drops_redundant_members() {
        assert_eq!(set(&[">", ">>", "<><"]), set(&[">"]));
        assert_eq!(set(&[">", ">>", "<<"]), set(&[">", "<<"]));
        assert_eq!(FactorSet::new([Word::empty()]), Err(Error::EmptyWord));
    }
}
