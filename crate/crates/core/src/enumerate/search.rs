//! Depth-first construction of meandric permutations.
//!
//! The road is laid one crossing at a time. For each side of the river the
//! arcs placed so far cut the half-plane into faces; a new arc from the
//! current crossing can only go to an unused crossing in the same face.
//! Faces are stored as bitmasks of river positions, so candidate generation
//! is a single mask and each step costs O(size of the face being split).
//!
//! The entry ray splits the upper half-plane at `a_1` into two outer faces
//! (ids 0 and 1); the lower side starts with one outer face (id 0). The road
//! is complete when the last crossing sits in an outer face on the exit side.

/// Largest order the bitmask representation supports.
pub const MAX_ORDER: usize = 62;

const UPPER: usize = 0;
const LOWER: usize = 1;

#[inline]
fn points(n: usize) -> u64 {
    ((1u64 << (n + 1)) - 1) & !1
}

#[inline]
fn strictly_between(lo: u32, hi: u32) -> u64 {
    ((1u64 << hi) - 1) & !((1u64 << (lo + 1)) - 1)
}

#[derive(Clone, Debug)]
pub(crate) struct Search {
    n: usize,
    path: Vec<u32>,
    used: u64,
    face_of: [[u8; 64]; 2],
    faces: [Vec<u64>; 2],
    undo: Vec<(usize, u8, u64)>,
}

impl Search {
    pub(crate) fn new(n: usize) -> Search {
        assert!((1..=MAX_ORDER).contains(&n), "order {n} outside 1..={MAX_ORDER}");
        Search {
            n,
            path: Vec::with_capacity(n),
            used: 0,
            face_of: [[0; 64]; 2],
            faces: [Vec::with_capacity(n + 2), Vec::with_capacity(n + 2)],
            undo: Vec::with_capacity(n),
        }
    }

    pub(crate) fn path(&self) -> &[u32] {
        &self.path
    }

    /// Side of the next road piece: segment `i = len` is below when `i` is odd.
    #[inline]
    fn next_side(&self) -> usize {
        if self.path.len() % 2 == 1 {
            LOWER
        } else {
            UPPER
        }
    }

    #[inline]
    pub(crate) fn candidates(&self) -> u64 {
        match self.path.last() {
            None => points(self.n),
            Some(&c) => {
                let s = self.next_side();
                self.faces[s][self.face_of[s][c as usize] as usize] & !self.used
            }
        }
    }

    /// Parity test on the faces of both sides.
    ///
    /// Every crossing still to be visited, except the last one, needs one arc
    /// on each side; the last one needs an arc on the non-exit side only, and
    /// the current crossing still owes an arc on the next side. Future arcs
    /// stay inside a face, so each face must hold an even number of these
    /// endpoints, except exactly one outer face on the exit side, which holds
    /// the last crossing.
    #[inline]
    fn parity_ok(&self) -> bool {
        let exit = if self.n % 2 == 0 { UPPER } else { LOWER };
        let next = self.next_side();
        let c = *self.path.last().expect("non-empty path") as usize;
        let free = !self.used;
        for s in [UPPER, LOWER] {
            let pending = if s == next { Some(self.face_of[s][c] as usize) } else { None };
            let mut odd = 0;
            for (f, &mask) in self.faces[s].iter().enumerate() {
                let open = mask & free;
                let demand = open.count_ones() + u32::from(pending == Some(f));
                if demand % 2 == 0 {
                    continue;
                }
                let outer = f == 0 || (s == UPPER && f == 1);
                if s != exit || !outer || open == 0 {
                    return false;
                }
                odd += 1;
            }
            if s == exit && odd != 1 {
                return false;
            }
        }
        true
    }

    pub(crate) fn push(&mut self, v: u32) {
        debug_assert!(self.candidates() & (1u64 << v) != 0);
        match self.path.last() {
            None => {
                let all = points(self.n);
                let below = all & ((1u64 << v) - 1);
                let above = all & !((1u64 << (v + 1)) - 1);
                self.faces[UPPER].clear();
                self.faces[UPPER].extend([below, above]);
                self.faces[LOWER].clear();
                self.faces[LOWER].push(all);
                for p in 1..=self.n {
                    self.face_of[UPPER][p] = u8::from(p as u32 > v);
                    self.face_of[LOWER][p] = 0;
                }
            }
            Some(&c) => {
                let s = self.next_side();
                let f = self.face_of[s][c as usize];
                let inside = self.faces[s][f as usize] & strictly_between(c.min(v), c.max(v));
                self.faces[s][f as usize] ^= inside;
                let g = self.faces[s].len() as u8;
                self.faces[s].push(inside);
                let mut bits = inside;
                while bits != 0 {
                    self.face_of[s][bits.trailing_zeros() as usize] = g;
                    bits &= bits - 1;
                }
                self.undo.push((s, f, inside));
            }
        }
        self.used |= 1u64 << v;
        self.path.push(v);
    }

    pub(crate) fn pop(&mut self) {
        let v = self.path.pop().expect("pop on empty search");
        self.used &= !(1u64 << v);
        if self.path.is_empty() {
            return;
        }
        let (s, f, inside) = self.undo.pop().expect("undo record");
        self.faces[s].pop();
        self.faces[s][f as usize] |= inside;
        let mut bits = inside;
        while bits != 0 {
            self.face_of[s][bits.trailing_zeros() as usize] = f;
            bits &= bits - 1;
        }
    }

    /// Whether the completed road can leave through its exit ray.
    #[inline]
    fn exit_ok(&self) -> bool {
        let last = *self.path.last().expect("complete path") as usize;
        if self.n % 2 == 0 {
            self.face_of[UPPER][last] <= 1
        } else {
            self.face_of[LOWER][last] == 0
        }
    }

    /// Visits every completion of the current prefix in lexicographic order.
    pub(crate) fn run<F: FnMut(&[u32])>(&mut self, visit: &mut F) {
        if self.path.len() == self.n {
            if self.exit_ok() {
                visit(&self.path);
            }
            return;
        }
        if !self.path.is_empty() && !self.parity_ok() {
            return;
        }
        let mut cand = self.candidates();
        while cand != 0 {
            let v = cand.trailing_zeros();
            cand &= cand - 1;
            self.push(v);
            self.run(visit);
            self.pop();
        }
    }

    /// Collects all feasible prefixes of length `depth`.
    pub(crate) fn prefixes(&mut self, depth: usize, out: &mut Vec<Vec<u32>>) {
        if self.path.len() == depth {
            out.push(self.path.clone());
            return;
        }
        if !self.path.is_empty() && !self.parity_ok() {
            return;
        }
        let mut cand = self.candidates();
        while cand != 0 {
            let v = cand.trailing_zeros();
            cand &= cand - 1;
            self.push(v);
            self.prefixes(depth, out);
            self.pop();
        }
    }

    /// Replays a prefix; returns false if some step is infeasible.
    pub(crate) fn replay(&mut self, prefix: &[u32]) -> bool {
        for &v in prefix {
            if v == 0 || v as usize > self.n || self.candidates() & (1u64 << v) == 0 {
                return false;
            }
            self.push(v);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        Search::new(n).run(&mut |p| out.push(p.to_vec()));
        out
    }

    #[test]
    fn small_orders() {
        assert_eq!(all(1), vec![vec![1]]);
        assert_eq!(all(3), vec![vec![1, 2, 3], vec![3, 2, 1]]);
        assert_eq!(
            all(4),
            vec![
                vec![1, 2, 3, 4],
                vec![1, 4, 3, 2],
                vec![2, 3, 4, 1],
                vec![3, 2, 1, 4],
                vec![4, 1, 2, 3],
                vec![4, 3, 2, 1]
            ]
        );
    }

    #[test]
    fn push_pop_restores_state() {
        let mut s = Search::new(6);
        s.push(3);
        let before = (s.faces.clone(), s.face_of, s.used);
        s.push(2);
        s.push(1);
        s.pop();
        s.pop();
        assert_eq!((s.faces.clone(), s.face_of, s.used), before);
    }

    #[test]
    fn replay_rejects_infeasible() {
        let mut s = Search::new(3);
        assert!(!s.replay(&[2, 1, 3]) || !s.exit_ok());
        let mut s = Search::new(4);
        assert!(s.replay(&[1, 4]));
    }
}
