//! Permutations of {1, ..., n} with the combinatorics the braid-group
//! machinery needs: composition, inversion counts, canonical reduced words
//! in the adjacent transpositions t_1, ..., t_{n-1}, and (i, j)-shuffles.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * composition is right-to-left: `(s.compose(&t))(x) = s(t(x))`;
//! * a word `[i1, ..., im]` denotes `t_{i1} . t_{i2} ... t_{im}`, so the
//!   first letter is applied last;
//! * letters are 1-based: letter `i` swaps positions `i` and `i + 1`.
//!
//! Internally images are stored 0-based; every public letter or one-line
//! datum is 1-based to match the wire formats.

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    /// images[i] is the 0-based image of 0-based point i.
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// The adjacent transposition for 1-based letter `i` (swaps positions
    /// i and i + 1).
    pub fn transposition(n: usize, letter: usize) -> Perm {
        assert!(letter >= 1 && letter < n, "letter {} out of range for n = {}", letter, n);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(letter - 1, letter);
        Perm { images }
    }

    pub fn from_images_0based(images: Vec<usize>) -> Perm {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            assert!(x < n && !seen[x], "not a permutation");
            seen[x] = true;
        }
        Perm { images }
    }

    /// One-line notation [s(1), ..., s(n)] with 1-based values.
    pub fn from_one_line(line: &[usize]) -> Option<Perm> {
        let n = line.len();
        let mut images = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for &x in line {
            if x < 1 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
            images.push(x - 1);
        }
        Some(Perm { images })
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// 0-based application.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` after `other`: (self.compose(other))(x) = self(other(x)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    /// Number of inversions; equals the length of any reduced word.
    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i32 {
        if self.inversions() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The canonical reduced word, computed by selection sort: repeatedly
    /// take the largest value not yet in place and walk it rightward to its
    /// home slot with adjacent swaps applied on the right; the word is the
    /// reversal of the applied letters.  The result has length
    /// [`Perm::inversions`] and composes back to `self`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut p = self.images.clone();
        let mut applied = Vec::with_capacity(self.inversions());
        for v in (0..n).rev() {
            let pos = p.iter().position(|&x| x == v).expect("value present");
            for j in pos..v {
                // Right-composition with t_{j+1} swaps one-line slots j, j+1.
                p.swap(j, j + 1);
                applied.push(j + 1);
            }
        }
        applied.reverse();
        applied
    }

    /// Compose a word of 1-based letters: [i1, ..., im] -> t_{i1} ... t_{im}.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        let mut p = Perm::identity(n);
        for &i in word {
            p = p.compose(&Perm::transposition(n, i));
        }
        p
    }

    /// True when left-multiplying by t_i shortens the permutation, i.e. the
    /// values i and i + 1 (1-based) appear out of order.
    pub fn is_left_descent(&self, letter: usize) -> bool {
        assert!(letter >= 1 && letter < self.n());
        let inv = self.inverse();
        inv.images[letter - 1] > inv.images[letter]
    }

    /// Smallest 1-based letter that is a left descent; `None` only for the
    /// identity.
    pub fn min_left_descent(&self) -> Option<usize> {
        let inv = self.inverse();
        (1..self.n()).find(|&i| inv.images[i - 1] > inv.images[i])
    }

    /// All reduced words, by peeling left descents.  Exponential; intended
    /// for cross-checks on small n only.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..n {
            if !self.is_left_descent(i) {
                continue;
            }
            let shorter = Perm::transposition(n, i).compose(self);
            for mut w in shorter.all_reduced_words() {
                w.insert(0, i);
                out.push(w);
            }
        }
        out
    }
}

impl std::fmt::Display for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.one_line().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Perm, D::Error> {
        let line = Vec::<usize>::deserialize(deserializer)?;
        Perm::from_one_line(&line)
            .ok_or_else(|| serde::de::Error::custom("not a permutation in one-line notation"))
    }
}

/// All of S_n in lexicographic one-line order (n! entries; keep n small).
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm { images: current.clone() });
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// The (i, j)-shuffles: permutations of {1, ..., i+j} increasing on the
/// first i and on the last j positions.  There are binom(i+j, i) of them,
/// enumerated by the image set of the first block in lexicographic order.
pub fn shuffles(i: usize, j: usize) -> Vec<Perm> {
    let n = i + j;
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (0..i).collect();
    loop {
        let mut in_subset = vec![false; n];
        for &s in &subset {
            in_subset[s] = true;
        }
        let mut images = Vec::with_capacity(n);
        images.extend(subset.iter().copied());
        images.extend((0..n).filter(|&x| !in_subset[x]));
        out.push(Perm { images });
        // Next lexicographic i-subset of {0, ..., n-1}.
        if i == 0 {
            break;
        }
        let mut k = i;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if subset[k] < n - (i - k) {
                subset[k] += 1;
                for t in k + 1..i {
                    subset[t] = subset[t - 1] + 1;
                }
                break;
            }
        }
    }
    out
}
