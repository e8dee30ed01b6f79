//! Exhaustive quantification over tuples of elements.

/// Returns the lexicographically first tuple of length `arity` over `0..n`
/// for which `holds` is false.
pub fn first_failure(n: usize, arity: usize, mut holds: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut tuple = vec![0usize; arity];
    if n == 0 {
        return None;
    }
    loop {
        if !holds(&tuple) {
            return Some(tuple);
        }
        // odometer, last position fastest
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Calls `f` on every tuple in lexicographic order.
pub fn for_each_tuple(n: usize, arity: usize, mut f: impl FnMut(&[usize])) {
    first_failure(n, arity, |t| {
        f(t);
        true
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn visits_in_lexicographic_order() {
        let mut seen = Vec::new();
        for_each_tuple(3, 2, |t| seen.push((t[0], t[1])));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], (0, 0));
        assert_eq!(seen[1], (0, 1));
        assert_eq!(seen[8], (2, 2));
    }

    #[test]
    fn first_failure_is_lexicographically_least() {
        let w = first_failure(4, 3, |t| !(t[0] + t[2] == 3 && t[1] > 0));
        assert_eq!(w, Some(vec![0, 1, 3]));
        assert_eq!(first_failure(4, 0, |_| true), None);
        assert_eq!(first_failure(4, 0, |_| false), Some(vec![]));
    }
}
