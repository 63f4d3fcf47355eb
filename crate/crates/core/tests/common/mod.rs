//! Independent oracles shared by the integration tests. These never call
//! the code paths they are used to check.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use std::collections::HashMap;
use svtcrystal::shape::{Partition, SkewShape};

/// Number of semistandard tableaux of shape `λ` with entries at most `n`,
/// counted by the Gelfand–Tsetlin transfer recursion: chains
/// `∅ = μ_0 ⊆ ... ⊆ μ_n = λ` of horizontal strips.
pub fn ssyt_count_gt(lambda: &Partition, n: usize) -> usize {
    fn rec(lambda: &Partition, n: usize, memo: &mut HashMap<(Vec<usize>, usize), usize>) -> usize {
        if n == 0 {
            return usize::from(lambda.is_empty());
        }
        let key = (lambda.parts().to_vec(), n);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for mu in lambda.subpartitions() {
            let skew = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
            if skew.is_horizontal_strip() {
                total += rec(&mu, n - 1, memo);
            }
        }
        memo.insert(key, total);
        total
    }
    rec(lambda, n, &mut HashMap::new())
}

/// The same count by the hook-content formula
/// `Π_cells (n + c(u)) / h(u)`, evaluated exactly.
pub fn ssyt_count_hook_content(lambda: &Partition, n: usize) -> usize {
    if lambda.rows() > n {
        return 0;
    }
    let conj = lambda.conjugate();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, &len) in lambda.parts().iter().enumerate() {
        for j in 0..len {
            let content = j as i64 - i as i64;
            num *= BigInt::from(n as i64 + content);
            let hook = (len - j) + (conj.part(j) - i) - 1;
            den *= BigInt::from(hook as i64);
        }
    }
    (num / den).to_usize().expect("count fits usize")
}
