//! Finite universes and their subsets.
//!
//! A [`Universe`] is a finite, ordered ground set whose elements are
//! identified by index `0..size`; labels, when present, are display-only.
//! A [`Subset`] is a bit vector over a universe with the usual boolean set
//! algebra. Binary operations insist that both operands share a universe.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

#[derive(Debug)]
struct UniverseInner {
    size: usize,
    labels: Option<Vec<String>>,
}

/// A finite ground set. Cloning is cheap: the element data is shared.
#[derive(Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

impl Universe {
    /// Universe of `size` anonymous elements, displayed by index.
    pub fn new(size: usize) -> Self {
        Universe {
            inner: Arc::new(UniverseInner { size, labels: None }),
        }
    }

    /// Universe whose elements carry the given labels, in order.
    ///
    /// Labels must be pairwise distinct.
    pub fn with_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, label) in labels.iter().enumerate() {
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        Ok(Universe {
            inner: Arc::new(UniverseInner {
                size: labels.len(),
                labels: Some(labels),
            }),
        })
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn is_empty(&self) -> bool {
        self.inner.size == 0
    }

    /// Explicit labels, if any were supplied.
    pub fn labels(&self) -> Option<&[String]> {
        self.inner.labels.as_deref()
    }

    /// Display name of an element: its label, or its index rendered as text.
    ///
    /// Panics if `index` is out of range.
    pub fn label(&self, index: usize) -> String {
        assert!(index < self.inner.size, "element index out of range");
        match &self.inner.labels {
            Some(labels) => labels[index].clone(),
            None => index.to_string(),
        }
    }

    /// Resolve an element name. Labeled universes match labels; unlabeled
    /// universes accept the canonical index spelling (`"3"` for element 3).
    pub fn index_of(&self, name: &str) -> Option<usize> {
        match &self.inner.labels {
            Some(labels) => labels.iter().position(|l| l == name),
            None => match name.parse::<usize>() {
                Ok(i) if i < self.inner.size => Some(i),
                _ => None,
            },
        }
    }

    /// The empty subset of this universe.
    pub fn empty_set(&self) -> Subset {
        Subset {
            universe: self.clone(),
            words: vec![0; word_count(self.inner.size)],
        }
    }

    /// The subset containing every element.
    pub fn full_set(&self) -> Subset {
        self.empty_set().complement()
    }

    /// The one-element subset `{index}`. Panics if `index` is out of range.
    pub fn singleton(&self, index: usize) -> Subset {
        self.empty_set().with_element(index)
    }

    /// Build a subset from element indices, rejecting out-of-range ones.
    pub fn subset<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<Subset> {
        let mut words = vec![0u64; word_count(self.inner.size)];
        for index in indices {
            if index >= self.inner.size {
                return Err(Error::ElementOutOfRange {
                    index,
                    size: self.inner.size,
                });
            }
            words[index / 64] |= 1 << (index % 64);
        }
        Ok(Subset {
            universe: self.clone(),
            words,
        })
    }

    pub(crate) fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.size == other.inner.size && self.inner.labels == other.inner.labels)
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

impl PartialOrd for Universe {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Universe {
    fn cmp(&self, other: &Self) -> Ordering {
        self.inner
            .size
            .cmp(&other.inner.size)
            .then_with(|| self.inner.labels.cmp(&other.inner.labels))
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.inner.labels {
            Some(labels) => write!(f, "{{{}}}", labels.join(", ")),
            None => write!(f, "{{0..{}}}", self.inner.size),
        }
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Universe({self})")
    }
}

fn word_count(size: usize) -> usize {
    size.div_ceil(64)
}

/// A subset of a [`Universe`], stored as a bit vector keyed by element
/// index. Equality is extensional: same member set over the same universe.
#[derive(Clone)]
pub struct Subset {
    universe: Universe,
    words: Vec<u64>,
}

impl Subset {
    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe.size() && self.words[index / 64] & (1 << (index % 64)) != 0
    }

    /// Number of members.
    pub fn cardinality(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> Elements<'_> {
        Elements {
            words: &self.words,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Subset {
        let size = self.universe.size();
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        if !size.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (size % 64)) - 1;
            }
        }
        Subset {
            universe: self.universe.clone(),
            words,
        }
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.check_universe(other)?;
        Ok(self.zip_words(other, |a, b| a | b))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.check_universe(other)?;
        Ok(self.zip_words(other, |a, b| a & b))
    }

    /// Set difference `self − other`.
    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        self.check_universe(other)?;
        Ok(self.zip_words(other, |a, b| a & !b))
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self.is_subset_raw(other))
    }

    pub fn is_disjoint_from(&self, other: &Subset) -> Result<bool> {
        self.check_universe(other)?;
        Ok(!self.intersects_raw(other))
    }

    /// Copy of `self` with `index` added. Panics if `index` is out of range.
    pub fn with_element(&self, index: usize) -> Subset {
        assert!(
            index < self.universe.size(),
            "element index out of range for universe"
        );
        let mut words = self.words.clone();
        words[index / 64] |= 1 << (index % 64);
        Subset {
            universe: self.universe.clone(),
            words,
        }
    }

    /// Copy of `self` with `index` removed. Panics if `index` is out of range.
    pub fn without_element(&self, index: usize) -> Subset {
        assert!(
            index < self.universe.size(),
            "element index out of range for universe"
        );
        let mut words = self.words.clone();
        words[index / 64] &= !(1 << (index % 64));
        Subset {
            universe: self.universe.clone(),
            words,
        }
    }

    /// All subsets of `self` (including the empty set and `self`), in
    /// ascending bit-pattern order.
    pub fn subsets(&self) -> SubsetsOf {
        SubsetsOf {
            mask: self.clone(),
            current: Some(vec![0; self.words.len()]),
        }
    }

    pub(crate) fn check_universe(&self, other: &Subset) -> Result<()> {
        if self.universe.same_as(&other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                left: self.universe.clone(),
                right: other.universe.clone(),
            })
        }
    }

    /// Subset test that skips the universe check; callers guarantee both
    /// operands share a universe.
    pub(crate) fn is_subset_raw(&self, other: &Subset) -> bool {
        debug_assert!(self.universe.same_as(&other.universe));
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersects_raw(&self, other: &Subset) -> bool {
        debug_assert!(self.universe.same_as(&other.universe));
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// The set's bit pattern as a single word; only valid for universes of
    /// at most 64 elements.
    pub(crate) fn mask_u64(&self) -> u64 {
        debug_assert!(self.universe.size() <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub(crate) fn from_mask_u64(universe: &Universe, mask: u64) -> Subset {
        debug_assert!(universe.size() <= 64);
        debug_assert!(
            universe.size() == 64 || mask < (1u64 << universe.size().max(1)) || mask == 0
        );
        let words = if universe.size() == 0 {
            Vec::new()
        } else {
            vec![mask]
        };
        Subset {
            universe: universe.clone(),
            words,
        }
    }

    fn zip_words(&self, other: &Subset, op: impl Fn(u64, u64) -> u64) -> Subset {
        Subset {
            universe: self.universe.clone(),
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.words == other.words
    }
}

impl Eq for Subset {}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    /// Orders sets over one universe by ascending bit pattern (element 0 is
    /// the least significant bit); this is the canonical order used whenever
    /// families of sets are materialized or printed.
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, index) in self.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.universe.label(index))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending iterator over the member indices of a [`Subset`].
pub struct Elements<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for Elements<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * 64 + bit)
    }
}

/// Iterator over all subsets of a fixed set, ascending by bit pattern.
pub struct SubsetsOf {
    mask: Subset,
    current: Option<Vec<u64>>,
}

impl Iterator for SubsetsOf {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.current.take()?;
        let item = Subset {
            universe: self.mask.universe.clone(),
            words: current.clone(),
        };
        if current != self.mask.words {
            // Next submask of m after s is (s − m) & m, with the borrow
            // propagated across words.
            let mut next = current;
            let mut borrow = 0u64;
            for (word, &mask_word) in next.iter_mut().zip(&self.mask.words) {
                let (d1, b1) = word.overflowing_sub(mask_word);
                let (d2, b2) = d1.overflowing_sub(borrow);
                *word = d2 & mask_word;
                borrow = u64::from(b1 || b2);
            }
            self.current = Some(next);
        }
        Some(item)
    }
}
