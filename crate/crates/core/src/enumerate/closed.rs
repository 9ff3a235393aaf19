use crate::model::{cycle_length, ClosedMeander};

/// All noncrossing perfect matchings of `1..=2n`, as partner arrays with
/// index 0 unused. There are `Catalan(n)` of them.
pub fn noncrossing_matchings(n: usize) -> Vec<Vec<u32>> {
    fn go(x: usize, n: usize, opened: usize, stack: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if x > 2 * n {
            out.push(cur.clone());
            return;
        }
        if opened < n {
            stack.push(x as u32);
            go(x + 1, n, opened + 1, stack, cur, out);
            stack.pop();
        }
        if let Some(p) = stack.pop() {
            cur[x] = p;
            cur[p as usize] = x as u32;
            go(x + 1, n, opened, stack, cur, out);
            cur[x] = 0;
            cur[p as usize] = 0;
            stack.push(p);
        }
    }
    let mut out = Vec::new();
    go(1, n, 0, &mut Vec::new(), &mut vec![0; 2 * n + 1], &mut out);
    out
}

/// Closed meanders with `2n` crossings: ordered pairs of noncrossing
/// matchings whose union is one cycle.
pub fn count_closed(n: usize) -> u64 {
    let m = noncrossing_matchings(n);
    m.iter()
        .map(|u| m.iter().filter(|l| cycle_length(u, l) == 2 * n).count() as u64)
        .sum()
}

pub fn closed_meanders(n: usize) -> Vec<ClosedMeander> {
    let pairs = |p: &Vec<u32>| -> Vec<(u32, u32)> {
        (1..p.len() as u32)
            .filter(|&x| p[x as usize] > x)
            .map(|x| (x, p[x as usize]))
            .collect()
    };
    let m = noncrossing_matchings(n);
    let mut out = Vec::new();
    for u in &m {
        for l in &m {
            if cycle_length(u, l) == 2 * n {
                out.push(ClosedMeander::new(pairs(u), pairs(l)).expect("single cycle"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::is_noncrossing;

    #[test]
    fn catalan() {
        let c: Vec<usize> = (1..=6).map(|n| noncrossing_matchings(n).len()).collect();
        assert_eq!(c, vec![1, 2, 5, 14, 42, 132]);
        assert!(noncrossing_matchings(4).iter().all(|p| is_noncrossing(p)));
    }

    #[test]
    fn small_closed_counts() {
        assert_eq!(count_closed(1), 1);
        assert_eq!(count_closed(3), 8);
        assert_eq!(count_closed(5), 262);
        assert_eq!(closed_meanders(2).len(), 2);
    }
}
