use std::ops::ControlFlow;

/// Visits every subset of `items` with `1..=max_size` members, in
/// lexicographic order of the member lists (`items` must be ascending).
/// Stops early when the visitor breaks.
pub(crate) fn try_for_each_small_subset<B>(
    items: &[usize],
    max_size: usize,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    fn go<B>(
        items: &[usize],
        from: usize,
        max_size: usize,
        current: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        for i in from..items.len() {
            current.push(items[i]);
            visit(current)?;
            if current.len() < max_size {
                go(items, i + 1, max_size, current, visit)?;
            }
            current.pop();
        }
        ControlFlow::Continue(())
    }
    if max_size == 0 {
        return ControlFlow::Continue(());
    }
    go(items, 0, max_size, &mut Vec::with_capacity(max_size), &mut visit)
}

/// All subsets of `items` with `1..=max_size` members, lexicographically.
pub(crate) fn small_subsets(items: &[usize], max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = try_for_each_small_subset::<()>(items, max_size, |s| {
        out.push(s.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Every `size`-element combination of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, size: usize) -> Vec<Vec<usize>> {
    let items: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    let _ = try_for_each_small_subset::<()>(&items, size, |s| {
        if s.len() == size {
            out.push(s.to_vec());
        }
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> u64 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
    }

    #[test]
    fn subsets_are_lexicographic_and_complete() {
        let got = small_subsets(&[1, 3, 4], 2);
        let want: Vec<Vec<usize>> = vec![vec![1], vec![1, 3], vec![1, 4], vec![3], vec![3, 4], vec![4]];
        assert_eq!(got, want);
        let mut sorted = got.clone();
        sorted.sort();
        assert_eq!(got, sorted);
        assert_eq!(small_subsets(&[0, 1, 2, 3, 4, 5], 6).len(), 63);
        assert!(small_subsets(&[0, 1], 0).is_empty());
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(5, 2).len(), 10);
        assert_eq!(combinations(6, 3).len() as u64, binomial(6, 3));
        assert_eq!(binomial(12, 2), 66);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn early_exit() {
        let mut seen = 0;
        let r = try_for_each_small_subset(&[0, 1, 2], 3, |s| {
            seen += 1;
            if s == [0, 2] {
                ControlFlow::Break(seen)
            } else {
                ControlFlow::Continue(())
            }
        });
        // [0] [0,1] [0,1,2] [0,2]
        assert_eq!(r, ControlFlow::Break(4));
    }
}
