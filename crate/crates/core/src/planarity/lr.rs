//! Left-right planarity test (Brandes' formulation of de Fraysseix and
//! Rosenstiehl) with rotation-system output.
//!
//! Edges are addressed by index; after the orientation phase every edge has a
//! fixed direction `src -> dst` along the DFS (tree edges downward, back edges
//! upward).

use crate::graph::Graph;

type E = usize;

#[derive(Clone, Copy, Default, Debug)]
struct Interval {
    low: Option<E>,
    high: Option<E>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State<'a> {
    g: &'a Graph,
    // per vertex
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<E>>,
    incident: Vec<Vec<E>>,
    ordered_out: Vec<Vec<E>>,
    roots: Vec<usize>,
    // per edge
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    reference: Vec<Option<E>>,
    side: Vec<i64>,
    lowpt_edge: Vec<E>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

/// Runs the test; returns the clockwise rotation at every vertex when the
/// graph is planar.
pub(crate) fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if n > 2 && g.m() > 3 * n - 6 {
        return None;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let mut incident = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut st = State {
        g,
        height: vec![None; n],
        parent_edge: vec![None; n],
        incident,
        ordered_out: vec![Vec::new(); n],
        roots: Vec::new(),
        src: edges.iter().map(|e| e.0).collect(),
        dst: edges.iter().map(|e| e.1).collect(),
        oriented: vec![false; m],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        reference: vec![None; m],
        side: vec![1; m],
        lowpt_edge: vec![usize::MAX; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
    };

    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            st.roots.push(v);
            st.dfs_orientation(v);
        }
    }

    st.sort_out_edges();
    for i in 0..st.roots.len() {
        if !st.dfs_testing(st.roots[i]) {
            return None;
        }
    }

    for e in 0..m {
        let s = st.sign(e);
        st.nesting_depth[e] *= s;
    }
    st.sort_out_edges();
    Some(st.embed())
}

impl State<'_> {
    fn other(&self, e: E, v: usize) -> usize {
        if self.src[e] == v {
            self.dst[e]
        } else {
            self.src[e]
        }
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("vertex visited")
    }

    fn sort_out_edges(&mut self) {
        let n = self.g.n();
        for v in 0..n {
            let mut out: Vec<E> = self.incident[v].iter().copied().filter(|&e| self.src[e] == v).collect();
            out.sort_by_key(|&e| self.nesting_depth[e]);
            self.ordered_out[v] = out;
        }
    }

    fn dfs_orientation(&mut self, root: usize) {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.g.n()];
        let mut skip_init = vec![false; self.src.len()];

        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            while ind[v] < self.incident[v].len() {
                let vw = self.incident[v][ind[v]];
                if !skip_init[vw] {
                    if self.oriented[vw] {
                        ind[v] += 1;
                        continue;
                    }
                    let w = self.other(vw, v);
                    self.oriented[vw] = true;
                    self.src[vw] = v;
                    self.dst[vw] = w;
                    self.lowpt[vw] = self.h(v);
                    self.lowpt2[vw] = self.h(v);
                    if self.height[w].is_none() {
                        self.parent_edge[w] = Some(vw);
                        self.height[w] = Some(self.h(v) + 1);
                        stack.push(v);
                        stack.push(w);
                        skip_init[vw] = true;
                        break;
                    }
                    self.lowpt[vw] = self.h(w);
                }

                self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.h(v) {
                    self.nesting_depth[vw] += 1;
                }

                if let Some(e) = e {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: E) -> bool {
        match i.high {
            Some(h) if !i.is_empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("nonempty right")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("nonempty left")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn dfs_testing(&mut self, root: usize) -> bool {
        let mut stack = vec![root];
        let mut ind = vec![0usize; self.g.n()];
        let mut skip_init = vec![false; self.src.len()];

        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            let mut skip_final = false;
            while ind[v] < self.ordered_out[v].len() {
                let ei = self.ordered_out[v][ind[v]];
                let w = self.dst[ei];
                if !skip_init[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if self.parent_edge[w] == Some(ei) {
                        stack.push(v);
                        stack.push(w);
                        skip_init[ei] = true;
                        skip_final = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval { low: Some(ei), high: Some(ei) },
                    });
                }

                if self.lowpt[ei] < self.h(v) {
                    if ind[v] == 0 {
                        let pe = e.expect("only the root lacks a parent edge");
                        self.lowpt_edge[pe] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e.expect("parent edge")) {
                        return false;
                    }
                }
                ind[v] += 1;
            }

            if !skip_final {
                if let Some(e) = e {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: E, e: E) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei on stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("nonempty");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }

        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.reference[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }

        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: E) {
        let u = self.src[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }

        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }

        if self.lowpt[e] < hu {
            let top = self.stack.last().expect("return edge pending");
            let hl = top.left.high;
            let hr = top.right.high;
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: E) -> i64 {
        let mut chain = vec![e];
        let mut cur = e;
        while let Some(r) = self.reference[cur] {
            chain.push(r);
            cur = r;
        }
        // resolve from the far end of the reference chain back to e
        for i in (0..chain.len() - 1).rev() {
            let (a, b) = (chain[i], chain[i + 1]);
            self.side[a] *= self.side[b];
            self.reference[a] = None;
        }
        self.side[e]
    }

    fn embed(&mut self) -> Vec<Vec<usize>> {
        let n = self.g.n();
        let mut rot = Rotation::new(n);
        for v in 0..n {
            let mut prev = None;
            for &e in &self.ordered_out[v] {
                let w = self.dst[e];
                match prev {
                    None => rot.add_first(v, w),
                    Some(p) => rot.insert_after(v, w, p),
                }
                prev = Some(w);
            }
        }

        let mut left_ref = vec![usize::MAX; n];
        let mut right_ref = vec![usize::MAX; n];
        for ri in 0..self.roots.len() {
            let root = self.roots[ri];
            let mut stack = vec![root];
            let mut ind = vec![0usize; n];
            while let Some(v) = stack.pop() {
                while ind[v] < self.ordered_out[v].len() {
                    let ei = self.ordered_out[v][ind[v]];
                    ind[v] += 1;
                    let w = self.dst[ei];
                    if self.parent_edge[w] == Some(ei) {
                        rot.add_first(w, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        stack.push(v);
                        stack.push(w);
                        break;
                    } else if self.side[ei] == 1 {
                        rot.insert_after(w, v, right_ref[w]);
                    } else {
                        rot.insert_before(w, v, left_ref[w]);
                        left_ref[w] = v;
                    }
                }
            }
        }
        rot.order
    }
}

/// Clockwise neighbour lists with a tracked leftmost neighbour.
struct Rotation {
    order: Vec<Vec<usize>>,
    leftmost: Vec<Option<usize>>,
}

impl Rotation {
    fn new(n: usize) -> Self {
        Rotation { order: vec![Vec::new(); n], leftmost: vec![None; n] }
    }

    fn position(&self, v: usize, w: usize) -> usize {
        self.order[v].iter().position(|&x| x == w).expect("reference neighbour present")
    }

    fn insert_after(&mut self, v: usize, w: usize, reference: usize) {
        let i = self.position(v, reference);
        self.order[v].insert(i + 1, w);
    }

    fn insert_before(&mut self, v: usize, w: usize, reference: usize) {
        let i = self.position(v, reference);
        self.order[v].insert(i, w);
        if self.leftmost[v] == Some(reference) {
            self.leftmost[v] = Some(w);
        }
    }

    fn add_first(&mut self, v: usize, w: usize) {
        match self.leftmost[v] {
            None => {
                self.order[v].push(w);
                self.leftmost[v] = Some(w);
            }
            Some(l) => {
                self.insert_before(v, w, l);
                self.leftmost[v] = Some(w);
            }
        }
    }
}
