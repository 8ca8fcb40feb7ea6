//! The suffix-state automaton of a factor-avoidance language.
//!
//! For a factor set with longest member of length `m`, membership of a word
//! only depends on its last `m - 1` letters. The states are all `A`-free words
//! of length at most `m - 1`: the full history while it is shorter than that
//! (the "ramp"), then its suffix of length `m - 1` (the "deep" part, a
//! subgraph of the de Bruijn graph). A word is `A`-free iff its run from the
//! empty state never dies.
//!
//! Whether `a d b` is `A`-free only depends on the state reached by `a` and on
//! the first `min(|b|, m - 1)` letters of `b`. That turns the quantifiers of
//! transitivity into finitely many reachability checks, see
//! [`FactorAutomaton::is_transitive`].

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::words::{FactorSet, Letter, Word};

#[derive(Clone, Debug)]
pub struct FactorAutomaton {
    factors: FactorSet,
    window: usize,
    states: Vec<Word>,
    index: HashMap<Word, usize>,
    delta: Vec<[Option<usize>; 2]>,
}

impl FactorAutomaton {
    pub fn new(factors: &FactorSet) -> Self {
        let window = factors.max_len().saturating_sub(1);
        let mut states = vec![Word::empty()];
        let mut index = HashMap::from([(Word::empty(), 0)]);
        let mut delta = vec![[None, None]];
        let mut queue = VecDeque::from([0usize]);
        while let Some(s) = queue.pop_front() {
            for letter in Letter::ALL {
                let extended = states[s].concat(&Word::new(vec![letter]));
                if !factors.admits(&extended) {
                    continue;
                }
                let keep = extended.len().min(window);
                let next = Word::new(extended.letters()[extended.len() - keep..].to_vec());
                let t = *index.entry(next.clone()).or_insert_with(|| {
                    states.push(next);
                    delta.push([None, None]);
                    queue.push_back(states.len() - 1);
                    states.len() - 1
                });
                delta[s][letter.index()] = Some(t);
            }
        }
        FactorAutomaton {
            factors: factors.clone(),
            window,
            states,
            index,
            delta,
        }
    }

    pub fn factors(&self) -> &FactorSet {
        &self.factors
    }

    /// `m - 1`, the length of deep states.
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn state_word(&self, s: usize) -> &Word {
        &self.states[s]
    }

    pub fn state_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn step(&self, s: usize, letter: Letter) -> Option<usize> {
        self.delta[s][letter.index()]
    }

    pub fn run(&self, s: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(s, |s, &l| self.step(s, l))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(self.root(), w).is_some()
    }

    pub fn is_deep(&self, s: usize) -> bool {
        self.states[s].len() == self.window
    }

    pub fn deep_states(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.states.len()).filter(|&s| self.is_deep(s))
    }

    pub fn successors(&self, s: usize) -> impl Iterator<Item = (Letter, usize)> + '_ {
        Letter::ALL
            .into_iter()
            .filter_map(move |l| self.step(s, l).map(|t| (l, t)))
    }

    fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.states.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for (_, t) in self.successors(u) {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Whether every two `A`-free words `a`, `b` admit a connector `d` with
    /// `a d b` still `A`-free.
    ///
    /// Every state is the suffix state of some `A`-free word (itself) and
    /// every state word is the relevant prefix of some `A`-free word (again
    /// itself), so it suffices to check that from each state some reachable
    /// state can read each state word.
    pub fn is_transitive(&self) -> bool {
        let n = self.states.len();
        let readable: Vec<Vec<bool>> = (0..n)
            .map(|t| self.states.iter().map(|p| self.run(t, p).is_some()).collect())
            .collect();
        (0..n).all(|s| {
            let reach = self.reachable_from(s);
            (0..n).all(|p| (0..n).any(|t| reach[t] && readable[t][p]))
        })
    }

    /// Lengths `k <= k_max` of closed walks through deep states, optionally
    /// only those reading a word that uses both letters.
    pub fn closed_walk_lengths(&self, k_max: usize, nonconstant_only: bool) -> BTreeSet<usize> {
        let n = self.states.len();
        let deep: Vec<usize> = self.deep_states().collect();
        let mut found = BTreeSet::new();
        for &start in &deep {
            // cur[t] is a bitset over the "letters used" masks 0..4
            let mut cur = vec![0u8; n];
            cur[start] = 1;
            for k in 1..=k_max {
                let mut next = vec![0u8; n];
                for u in 0..n {
                    if cur[u] == 0 {
                        continue;
                    }
                    for (l, t) in self.successors(u) {
                        let bit = 1u8 << l.index();
                        for mask in 0..4u8 {
                            if cur[u] >> mask & 1 == 1 {
                                next[t] |= 1 << (mask | bit);
                            }
                        }
                    }
                }
                let hit = if nonconstant_only {
                    next[start] >> 3 & 1 == 1
                } else {
                    next[start] != 0
                };
                if hit {
                    found.insert(k);
                }
                cur = next;
            }
        }
        found
    }

    /// A (non-constant) `k`-periodic word, if one exists.
    pub fn periodic_word(&self, k: usize, nonconstant_only: bool) -> Option<Word> {
        if k == 0 {
            return None;
        }
        if k < self.window {
            return Word::all_of_length(k).find(|w| {
                (!nonconstant_only || !w.is_constant()) && is_periodic_unchecked(w, &self.factors)
            });
        }
        let n = self.states.len();
        for start in self.deep_states() {
            // layers[j][t] = masks reachable at t after j steps
            let mut layers = vec![vec![0u8; n]];
            layers[0][start] = 1;
            for j in 0..k {
                let mut next = vec![0u8; n];
                for u in 0..n {
                    for (l, t) in self.successors(u) {
                        for mask in 0..4u8 {
                            if layers[j][u] >> mask & 1 == 1 {
                                next[t] |= 1 << (mask | 1 << l.index());
                            }
                        }
                    }
                }
                layers.push(next);
            }
            let goal = if nonconstant_only {
                (layers[k][start] >> 3 & 1 == 1).then_some(3u8)
            } else {
                (0..4u8).find(|&m| layers[k][start] >> m & 1 == 1)
            };
            let Some(mut mask) = goal else { continue };
            // walk the layers backwards
            let mut letters = Vec::with_capacity(k);
            let mut state = start;
            for j in (0..k).rev() {
                let (prev, prev_mask, letter) = (0..n)
                    .flat_map(|u| self.successors(u).map(move |(l, t)| (u, l, t)))
                    .filter(|&(_, _, t)| t == state)
                    .find_map(|(u, l, _)| {
                        let bit = 1u8 << l.index();
                        [mask, mask & !bit]
                            .into_iter()
                            .filter(|&pm| pm | bit == mask)
                            .find(|&pm| layers[j][u] >> pm & 1 == 1)
                            .map(|pm| (u, pm, l))
                    })
                    .expect("a predecessor exists on a reachable layer");
                letters.push(letter);
                state = prev;
                mask = prev_mask;
            }
            letters.reverse();
            return Some(Word::new(letters));
        }
        None
    }

    /// Strongly connected components that contain at least one cycle.
    pub(crate) fn cyclic_components(&self) -> Vec<Component> {
        let n = self.states.len();
        let reach: Vec<Vec<bool>> = (0..n).map(|s| self.reachable_from(s)).collect();
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if assigned[s] {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&t| reach[s][t] && reach[t][s]).collect();
            for &t in &members {
                assigned[t] = true;
            }
            let loops: Vec<Letter> = self
                .successors(s)
                .filter(|&(_, t)| t == s)
                .map(|(l, _)| l)
                .collect();
            if members.len() == 1 && loops.is_empty() {
                continue;
            }
            let period = component_period(self, &members);
            out.push(Component {
                size: members.len(),
                period,
                has_nonconstant_cycle: members.len() > 1 || loops.len() == 2,
            });
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Component {
    pub size: usize,
    pub period: usize,
    pub has_nonconstant_cycle: bool,
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// gcd of cycle lengths in a strongly connected component, from BFS levels.
fn component_period(aut: &FactorAutomaton, members: &[usize]) -> usize {
    let inside: std::collections::HashSet<usize> = members.iter().copied().collect();
    let mut level = HashMap::from([(members[0], 0usize)]);
    let mut queue = VecDeque::from([members[0]]);
    let mut g = 0;
    while let Some(u) = queue.pop_front() {
        for (_, t) in aut.successors(u) {
            if !inside.contains(&t) {
                continue;
            }
            match level.get(&t) {
                None => {
                    level.insert(t, level[&u] + 1);
                    queue.push_back(t);
                }
                Some(&lt) => g = gcd(g, (level[&u] + 1).abs_diff(lt)),
            }
        }
    }
    g
}

fn is_periodic_unchecked(w: &Word, a: &FactorSet) -> bool {
    let m = a.max_len();
    let reps = m.div_ceil(w.len()) + 1;
    a.admits(&w.pow(reps))
}

/// Whether every power of the nonempty word `w` avoids `a`.
///
/// Any factor of length at most `m` of the infinite power of `w` already lies
/// inside `w^K` with `K = ceil(m / |w|) + 1`.
pub fn is_periodic(w: &Word, a: &FactorSet) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_periodic_unchecked(w, a))
}

/// `{k <= k_max : some (non-constant) k-word is periodic in L_A}`.
///
/// Lengths from `m - 1` on come from closed walks of the automaton; shorter
/// ones are found by trying every word.
pub fn enumerate_periods(a: &FactorSet, k_max: usize, nonconstant_only: bool) -> BTreeSet<usize> {
    let aut = FactorAutomaton::new(a);
    periods_of(&aut, k_max, nonconstant_only)
}

pub(crate) fn periods_of(aut: &FactorAutomaton, k_max: usize, nonconstant_only: bool) -> BTreeSet<usize> {
    let window = aut.window();
    let mut out: BTreeSet<usize> = aut
        .closed_walk_lengths(k_max, nonconstant_only)
        .into_iter()
        .filter(|&k| k >= window)
        .collect();
    for k in 1..window.min(k_max + 1) {
        let hit = Word::all_of_length(k).any(|w| {
            (!nonconstant_only || !w.is_constant()) && is_periodic_unchecked(&w, aut.factors())
        });
        if hit {
            out.insert(k);
        }
    }
    out
}

pub fn is_transitive(a: &FactorSet) -> bool {
    FactorAutomaton::new(a).is_transitive()
}
