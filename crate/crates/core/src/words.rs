//! Permutations of the multiset `{1^k, ..., n^k}`: statistics, multiset
//! pattern containment and the exhaustive generators for k-Stirling and
//! k-quasi-Stirling permutations.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bijections;
use crate::trees;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid word text {0:?}")]
    Parse(String),
    #[error("entry 0 is not allowed; letters start at 1")]
    ZeroEntry,
    #[error("letter {letter} occurs {count} times, expected {k}")]
    Multiplicity { letter: u32, count: usize, k: usize },
    #[error("multiplicity k must be at least 1")]
    ZeroMultiplicity,
    #[error("word length {len} is not a multiple of k = {k}")]
    Length { len: usize, k: usize },
    #[error("pattern {0:?} must use the values 1..m")]
    Pattern(Vec<u32>),
    #[error("refusing to enumerate {letters} letters; the bound is {bound}")]
    TooLarge { letters: usize, bound: usize },
}

/// Enumeration guard on the total number of letters `k * n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBound {
    pub max_letters: usize,
}

impl Default for EnumerationBound {
    fn default() -> Self {
        EnumerationBound { max_letters: 14 }
    }
}

impl EnumerationBound {
    pub fn new(max_letters: usize) -> Self {
        EnumerationBound { max_letters }
    }

    pub fn check(&self, n: usize, k: usize) -> Result<(), WordError> {
        let letters = n * k;
        if letters > self.max_letters {
            Err(WordError::TooLarge { letters, bound: self.max_letters })
        } else {
            Ok(())
        }
    }
}

/// Largest `k * n` for which the filter-based generators may run.
pub const FILTER_ORACLE_MAX_LETTERS: usize = 12;

/// `(asc, des, plat)` of a word. Position `0` is always an ascent and the
/// last position is always a descent, so the three sum to `len + 1` for a
/// nonempty word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct StatTriple {
    pub asc: usize,
    pub des: usize,
    pub plat: usize,
}

impl StatTriple {
    pub fn exponent(&self) -> [u32; 3] {
        [self.asc as u32, self.des as u32, self.plat as u32]
    }
}

pub fn descents(word: &[u32]) -> usize {
    if word.is_empty() {
        return 0;
    }
    word.windows(2).filter(|w| w[0] > w[1]).count() + 1
}

pub fn ascents(word: &[u32]) -> usize {
    if word.is_empty() {
        return 0;
    }
    word.windows(2).filter(|w| w[0] < w[1]).count() + 1
}

pub fn plateaus(word: &[u32]) -> usize {
    word.windows(2).filter(|w| w[0] == w[1]).count()
}

pub fn statistics(word: &[u32]) -> StatTriple {
    StatTriple { asc: ascents(word), des: descents(word), plat: plateaus(word) }
}

fn cyclic_count(word: &[u32], cmp: impl Fn(u32, u32) -> bool) -> usize {
    (0..word.len()).filter(|&i| cmp(word[i], word[(i + 1) % word.len()])).count()
}

/// Descents of the word read cyclically (the last letter is followed by the
/// first).
pub fn cyclic_descents(word: &[u32]) -> usize {
    cyclic_count(word, |a, b| a > b)
}

pub fn cyclic_ascents(word: &[u32]) -> usize {
    cyclic_count(word, |a, b| a < b)
}

/// A pattern over the values `1..=m`, each used at least once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(letters: Vec<u32>) -> Result<Self, WordError> {
        let m = letters.iter().copied().max().unwrap_or(0);
        if letters.is_empty() || (1..=m).any(|v| !letters.contains(&v)) || letters.contains(&0) {
            return Err(WordError::Pattern(letters));
        }
        Ok(Pattern(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }
}

impl FromStr for Pattern {
    type Err = WordError;

    /// Accepts `1212` or `1,2,1,2`.
    fn from_str(s: &str) -> Result<Self, WordError> {
        let s = s.trim();
        let letters = if s.contains(',') {
            parse_entries(s)?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| WordError::Parse(s.to_string())))
                .collect::<Result<Vec<_>, _>>()?
        };
        Pattern::new(letters)
    }
}

/// Does `word` contain a subsequence order-isomorphic to `pattern`? Equal
/// pattern letters must match equal entries, and distinct pattern letters
/// strictly ordered entries.
pub fn contains_pattern(word: &[u32], pattern: &Pattern) -> bool {
    let p = pattern.letters();
    let mut chosen = Vec::with_capacity(p.len());
    fn isomorphic(sub: &[u32], p: &[u32]) -> bool {
        (0..p.len()).all(|i| (0..i).all(|j| p[i].cmp(&p[j]) == sub[i].cmp(&sub[j])))
    }
    fn go(word: &[u32], start: usize, p: &[u32], chosen: &mut Vec<u32>) -> bool {
        if chosen.len() == p.len() {
            return isomorphic(chosen, p);
        }
        let need = p.len() - chosen.len();
        for i in start..=word.len().saturating_sub(need) {
            if i >= word.len() {
                break;
            }
            chosen.push(word[i]);
            // prune on the prefix
            if isomorphic(chosen, &p[..chosen.len()]) && go(word, i + 1, p, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    go(word, 0, p, &mut chosen)
}

/// A permutation of `{1^k, ..., n^k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetWord {
    entries: Vec<u32>,
    n: usize,
    k: usize,
}

impl MultisetWord {
    pub fn new(entries: Vec<u32>, k: usize) -> Result<Self, WordError> {
        if k == 0 {
            return Err(WordError::ZeroMultiplicity);
        }
        if !entries.len().is_multiple_of(k) {
            return Err(WordError::Length { len: entries.len(), k });
        }
        let n = entries.len() / k;
        let mut counts = vec![0usize; n + 1];
        for &e in &entries {
            if e == 0 {
                return Err(WordError::ZeroEntry);
            }
            if e as usize > n {
                let count = entries.iter().filter(|&&x| x == e).count();
                return Err(WordError::Multiplicity { letter: e, count, k });
            }
            counts[e as usize] += 1;
        }
        if let Some(letter) = (1..=n).find(|&i| counts[i] != k) {
            return Err(WordError::Multiplicity { letter: letter as u32, count: counts[letter], k });
        }
        Ok(MultisetWord { entries, n, k })
    }

    /// Infers `n` as the largest entry and `k` from the length. The empty
    /// word gets `k = 1`.
    pub fn from_entries(entries: Vec<u32>) -> Result<Self, WordError> {
        let n = entries.iter().copied().max().unwrap_or(0) as usize;
        if n == 0 {
            return if entries.is_empty() { Ok(MultisetWord::empty(1)) } else { Err(WordError::ZeroEntry) };
        }
        if !entries.len().is_multiple_of(n) {
            let count = entries.iter().filter(|&&x| x as usize == n).count();
            return Err(WordError::Multiplicity { letter: n as u32, count, k: entries.len() / n });
        }
        let k = entries.len() / n;
        MultisetWord::new(entries, k)
    }

    pub fn empty(k: usize) -> Self {
        MultisetWord { entries: Vec::new(), n: 0, k }
    }

    /// Caller guarantees the multiset invariant.
    pub(crate) fn from_parts_unchecked(entries: Vec<u32>, n: usize, k: usize) -> Self {
        debug_assert_eq!(entries.len(), n * k);
        MultisetWord { entries, n, k }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn statistics(&self) -> StatTriple {
        statistics(&self.entries)
    }

    pub fn reversed(&self) -> MultisetWord {
        let mut entries = self.entries.clone();
        entries.reverse();
        MultisetWord { entries, ..*self }
    }

    pub fn contains_pattern(&self, pattern: &Pattern) -> bool {
        contains_pattern(&self.entries, pattern)
    }

    /// First occurrence (1-based positions `i < j < k < l`) of `abab` with
    /// `a != b`, i.e. of 1212 or 2121.
    pub fn find_crossing(&self) -> Option<[usize; 4]> {
        find_crossing(&self.entries)
    }

    pub fn is_quasi_stirling(&self) -> bool {
        self.find_crossing().is_none()
    }

    /// Avoids 212: between two equal letters every entry is larger.
    pub fn is_stirling(&self) -> bool {
        let mut last = vec![None; self.n + 1];
        for (pos, &x) in self.entries.iter().enumerate() {
            if let Some(prev) = last[x as usize] {
                if self.entries[prev + 1..pos].iter().any(|&y| y < x) {
                    return false;
                }
            }
            last[x as usize] = Some(pos);
        }
        true
    }
}

/// Stack scan: the letter blocks are noncrossing iff every repeated letter
/// is the most recently opened one still awaiting copies.
pub(crate) fn find_crossing(word: &[u32]) -> Option<[usize; 4]> {
    let n = word.iter().copied().max().unwrap_or(0) as usize;
    let mut remaining = vec![0usize; n + 1];
    for &x in word {
        remaining[x as usize] += 1;
    }
    let mut last_pos = vec![usize::MAX; n + 1];
    let mut stack: Vec<u32> = Vec::new();
    for (pos, &x) in word.iter().enumerate() {
        let xi = x as usize;
        if last_pos[xi] != usize::MAX {
            let top = *stack.last().expect("open letter on stack");
            if top != x {
                // x .. top .. x(now) .. top(later)
                let i = last_pos[xi];
                let j = (i + 1..pos).find(|&p| word[p] == top).expect("top opened after x");
                let l = (pos + 1..word.len()).find(|&p| word[p] == top).expect("top still open");
                return Some([i + 1, j + 1, pos + 1, l + 1]);
            }
        } else {
            stack.push(x);
        }
        last_pos[xi] = pos;
        remaining[xi] -= 1;
        if remaining[xi] == 0 {
            stack.pop();
        }
    }
    None
}

fn parse_entries(s: &str) -> Result<Vec<u32>, WordError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|tok| tok.trim().parse::<u32>().map_err(|_| WordError::Parse(s.to_string()))).collect()
}

impl FromStr for MultisetWord {
    type Err = WordError;

    /// Comma-separated decimal entries, e.g. `4,1,1,4`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, WordError> {
        MultisetWord::from_entries(parse_entries(s)?)
    }
}

impl fmt::Display for MultisetWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Rearranges `v` into the next lexicographic permutation; `false` once `v`
/// is the last (non-increasing) arrangement. Handles repeated values, so it
/// visits each distinct multiset permutation once.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[i - 1] < v[j]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `{1^k, ..., n^k}` in lexicographic order.
pub struct MultisetPermutations {
    current: Option<Vec<u32>>,
    n: usize,
    k: usize,
}

impl MultisetPermutations {
    pub fn new(n: usize, k: usize) -> Self {
        let start = (1..=n as u32).flat_map(|i| std::iter::repeat_n(i, k)).collect();
        MultisetPermutations { current: Some(start), n, k }
    }
}

impl Iterator for MultisetPermutations {
    type Item = MultisetWord;

    fn next(&mut self) -> Option<MultisetWord> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(MultisetWord::from_parts_unchecked(cur, self.n, self.k))
    }
}

/// k-Stirling permutations, built by inserting the block `i^k` into every
/// gap of each word on `1..i-1`. The choice of gaps is run as a mixed-radix
/// counter, so the stream is lazy.
pub struct KStirlingIter {
    n: usize,
    k: usize,
    choices: Vec<usize>,
    done: bool,
}

impl KStirlingIter {
    fn build(&self) -> Vec<u32> {
        let mut w: Vec<u32> = Vec::with_capacity(self.n * self.k);
        for (i, &c) in self.choices.iter().enumerate() {
            let block = std::iter::repeat_n(i as u32 + 1, self.k);
            w.splice(c..c, block);
        }
        w
    }
}

impl Iterator for KStirlingIter {
    type Item = MultisetWord;

    fn next(&mut self) -> Option<MultisetWord> {
        if self.done {
            return None;
        }
        let word = MultisetWord::from_parts_unchecked(self.build(), self.n, self.k);
        // gaps available when inserting letter i+1: i*k + 1
        let mut i = self.choices.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.choices[i] += 1;
            if self.choices[i] <= i * self.k {
                break;
            }
            self.choices[i] = 0;
        }
        Some(word)
    }
}

pub fn enumerate_k_stirling(n: usize, k: usize, bound: EnumerationBound) -> Result<KStirlingIter, WordError> {
    if k == 0 {
        return Err(WordError::ZeroMultiplicity);
    }
    bound.check(n, k)?;
    Ok(KStirlingIter { n, k, choices: vec![0; n], done: false })
}

/// k-quasi-Stirling permutations, generated by walking every compartmented
/// tree and applying the depth-first reading map. For `k = 1` these are all
/// permutations of `[n]`.
pub fn enumerate_k_quasi_stirling(
    n: usize,
    k: usize,
    bound: EnumerationBound,
) -> Result<Box<dyn Iterator<Item = MultisetWord> + Send>, WordError> {
    if k == 0 {
        return Err(WordError::ZeroMultiplicity);
    }
    bound.check(n, k)?;
    if k == 1 {
        return Ok(Box::new(MultisetPermutations::new(n, 1)));
    }
    let trees = trees::enumerate_compartmented(n, k, bound).map_err(|e| match e {
        trees::TreeError::TooLarge { letters, bound } => WordError::TooLarge { letters, bound },
        other => unreachable!("{other}"),
    })?;
    Ok(Box::new(trees.map(|t| bijections::phi(&t))))
}

fn filter_guard(n: usize, k: usize, bound: EnumerationBound) -> Result<(), WordError> {
    if k == 0 {
        return Err(WordError::ZeroMultiplicity);
    }
    bound.check(n, k)?;
    EnumerationBound::new(FILTER_ORACLE_MAX_LETTERS).check(n, k)
}

/// Filter every multiset permutation by 1212/2121 avoidance. Oracle only;
/// restricted to `k * n <= 12`.
pub fn enumerate_k_quasi_stirling_by_filter(
    n: usize,
    k: usize,
    bound: EnumerationBound,
) -> Result<impl Iterator<Item = MultisetWord>, WordError> {
    filter_guard(n, k, bound)?;
    Ok(MultisetPermutations::new(n, k).filter(|w| w.is_quasi_stirling()))
}

/// Filter every multiset permutation by 212 avoidance. Oracle only.
pub fn enumerate_k_stirling_by_filter(
    n: usize,
    k: usize,
    bound: EnumerationBound,
) -> Result<impl Iterator<Item = MultisetWord>, WordError> {
    filter_guard(n, k, bound)?;
    Ok(MultisetPermutations::new(n, k).filter(|w| w.is_stirling()))
}
