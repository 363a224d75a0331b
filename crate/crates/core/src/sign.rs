//! The single Koszul sign oracle. Every sign produced by permuting
//! homogeneous symbols in this crate is computed here.

/// `(-1)^e`.
pub fn pow_neg1(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign of moving a symbol of degree `a` past one of degree `b`.
pub fn swap_sign(a: i64, b: i64) -> i32 {
    pow_neg1(a * b)
}

/// Sign of the rearrangement that places item `order[k]` at position `k`,
/// where `degrees[i]` is the degree of item `i`.
pub fn koszul_sign(degrees: &[i64], order: &[usize]) -> i32 {
    debug_assert_eq!(degrees.len(), order.len());
    let mut odd = 0u64;
    for (k, &i) in order.iter().enumerate() {
        if degrees[i] % 2 == 0 {
            continue;
        }
        for &j in &order[k + 1..] {
            if j < i && degrees[j] % 2 != 0 {
                odd += 1;
            }
        }
    }
    if odd % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of moving the block `left` past the block `right` (`left right -> right left`).
pub fn block_sign(left: i64, right: i64) -> i32 {
    swap_sign(left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_of_odd_symbols() {
        assert_eq!(koszul_sign(&[1, 1], &[1, 0]), -1);
        assert_eq!(koszul_sign(&[1, 2], &[1, 0]), 1);
    }

    #[test]
    fn cycle_matches_block_rule() {
        let d = [1, 3, 2, 5];
        // move item 0 to the end
        assert_eq!(koszul_sign(&d, &[1, 2, 3, 0]), block_sign(1, 3 + 2 + 5));
    }

    #[test]
    fn composition_is_multiplicative() {
        let d = [1, 1, 2, 1, 3];
        let p = [2, 0, 4, 1, 3];
        let q = [4, 3, 0, 2, 1];
        let pd: Vec<i64> = p.iter().map(|&i| d[i]).collect();
        let pq: Vec<usize> = q.iter().map(|&k| p[k]).collect();
        assert_eq!(
            koszul_sign(&d, &pq),
            koszul_sign(&d, &p) * koszul_sign(&pd, &q)
        );
    }
}
