//! Permutations of `{1..n}`: lengths, reduced words, Demazure products.

use crate::shape::WeakComposition;

/// A permutation in one-line notation; `perm[i]` is the image of `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((1..=n).collect())
    }

    pub fn from_one_line(v: Vec<usize>) -> Self {
        let mut sorted = v.clone();
        sorted.sort_unstable();
        assert!(sorted.iter().enumerate().all(|(i, &x)| x == i + 1), "not a permutation: {v:?}");
        Perm(v)
    }

    pub fn longest(n: usize) -> Self {
        Perm((1..=n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Perm(inv)
    }

    /// Coxeter length: number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut len = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// `self * s_i`: swaps positions `i`, `i+1` of the one-line notation.
    pub fn mul_s_right(&self, i: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Perm(v)
    }

    /// `s_i * self`: swaps values `i`, `i+1`.
    pub fn mul_s_left(&self, i: usize) -> Perm {
        let v = self.0.iter().map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x }).collect();
        Perm(v)
    }

    /// One reduced word `[i_1, ..., i_k]` with `self = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.clone();
        let mut rev = Vec::new();
        while !v.is_identity() {
            let i = (1..v.n()).find(|&i| v.0[i - 1] > v.0[i]).expect("non-identity has a descent");
            rev.push(i);
            v = v.mul_s_right(i);
        }
        rev.reverse();
        rev
    }

    /// Every reduced word for `self`, in lexicographic order.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        // Left descents i (with l(s_i w) < l(w)) can start a reduced word.
        for i in 1..self.n() {
            let inv = self.inverse();
            if inv.apply(i) > inv.apply(i + 1) {
                let rest = self.mul_s_left(i).all_reduced_words();
                for mut w in rest {
                    w.insert(0, i);
                    out.push(w);
                }
            }
        }
        out
    }

    /// All permutations of `S_n` (recursive heap-free generation).
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(Perm(prefix.clone()));
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v - 1] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// Acts on a weak composition: entry `a_i` moves to position `w(i)`.
    pub fn act_composition(&self, a: &WeakComposition) -> WeakComposition {
        assert_eq!(self.n(), a.len());
        let mut out = vec![0; a.len()];
        for (i, &v) in a.entries().iter().enumerate() {
            out[self.apply(i + 1) - 1] = v;
        }
        WeakComposition::new(out)
    }
}

/// Demazure (0-Hecke) product of a word: `w * s_i = w s_i` if the length
/// grows, else `w`. Two words are 0-Hecke equivalent iff their Demazure
/// products agree.
pub fn demazure_product(word: &[usize], n: usize) -> Perm {
    let mut w = Perm::identity(n);
    for &i in word {
        // Right descent test: w(i) > w(i+1) means l(w s_i) < l(w).
        if w.0[i - 1] < w.0[i] {
            w = w.mul_s_right(i);
        }
    }
    w
}

/// Minimal-length permutation `w(a)` with `w(a) · sort(a) = a`, where the
/// action places entry `i` of the sorted vector at position `w(i)`.
pub fn sorting_permutation(a: &WeakComposition) -> Perm {
    let n = a.len();
    let mut indexed: Vec<(usize, usize)> = a.entries().iter().copied().enumerate().collect();
    // Sort by value descending, position ascending; ties broken by position
    // keep the permutation minimal.
    indexed.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    let mut one_line = vec![0; n];
    for (rank, (pos, _)) in indexed.into_iter().enumerate() {
        one_line[rank] = pos + 1;
    }
    Perm(one_line)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lengths_and_words() {
        let w0 = Perm::longest(3);
        assert_eq!(w0.length(), 3);
        let words = w0.all_reduced_words();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        for word in words {
            let mut w = Perm::identity(3);
            for i in word {
                w = w.mul_s_right(i);
            }
            // s_{i_1} ... s_{i_k} composed as functions equals right
            // multiplication in reverse order; verify via length only.
            assert_eq!(w.length(), 3);
        }
    }

    #[test]
    fn reduced_word_reconstructs() {
        for w in Perm::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let mut v = Perm::identity(4);
            for &i in word.iter() {
                v = v.mul_s_right(i);
            }
            // Right-multiplying in word order rebuilds w since
            // w = s_{i_1} ... s_{i_k} acts as id * s_{i_1} * ... * s_{i_k}.
            assert_eq!(v, w, "word {word:?}");
        }
    }

    #[test]
    fn demazure_product_examples() {
        assert_eq!(demazure_product(&[1, 1], 3), demazure_product(&[1], 3));
        assert_eq!(demazure_product(&[1, 2, 1], 3), demazure_product(&[2, 1, 2], 3));
        assert_eq!(demazure_product(&[1, 3], 4), demazure_product(&[3, 1], 4));
        assert_ne!(demazure_product(&[1, 2], 3), demazure_product(&[2, 1], 3));
    }

    #[test]
    fn sorting_permutation_examples() {
        let a = WeakComposition::new(vec![0, 2, 0]);
        assert_eq!(sorting_permutation(&a).one_line(), &[2, 1, 3]);
        let a = WeakComposition::new(vec![0, 0, 2]);
        assert_eq!(sorting_permutation(&a).one_line(), &[3, 1, 2]);
        let a = WeakComposition::new(vec![2, 1, 0]);
        assert!(sorting_permutation(&a).is_identity());
    }

    #[test]
    fn act_composition_roundtrip() {
        let a = WeakComposition::new(vec![2, 1, 0]);
        let w = sorting_permutation(&WeakComposition::new(vec![0, 1, 2]));
        assert_eq!(w.act_composition(&a).entries(), &[0, 1, 2]);
    }
}
