#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use gizatullin::dualgraph::{FiberGraph, Role, Vertex, WeightedTree};
use gizatullin::Rational;

/// A plain weighted forest on `0..n`, independent of the library's types.
#[derive(Clone, Debug)]
pub struct Small {
    pub w: Vec<i64>,
    pub adj: Vec<BTreeSet<usize>>,
}

impl Small {
    pub fn single(w: i64) -> Small {
        Small { w: vec![w], adj: vec![BTreeSet::new()] }
    }

    pub fn chain(w: &[i64]) -> Small {
        let mut s = Small { w: w.to_vec(), adj: vec![BTreeSet::new(); w.len()] };
        for i in 1..w.len() {
            s.link(i - 1, i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a].remove(&b);
        self.adj[b].remove(&a);
    }

    fn push(&mut self, w: i64) -> usize {
        self.w.push(w);
        self.adj.push(BTreeSet::new());
        self.w.len() - 1
    }

    /// Blow up a general point of `v`.
    pub fn blowup_vertex(&self, v: usize) -> Small {
        let mut s = self.clone();
        s.w[v] -= 1;
        let e = s.push(-1);
        s.link(v, e);
        s
    }

    /// Blow up the node `a ∩ b`.
    pub fn blowup_edge(&self, a: usize, b: usize) -> Small {
        let mut s = self.clone();
        s.w[a] -= 1;
        s.w[b] -= 1;
        s.unlink(a, b);
        let e = s.push(-1);
        s.link(a, e);
        s.link(b, e);
        s
    }

    /// Blow down `v` (a (-1)-vertex of degree at most 2), renumbering the rest.
    pub fn blowdown(&self, v: usize) -> Small {
        assert_eq!(self.w[v], -1);
        let nb: Vec<usize> = self.adj[v].iter().copied().collect();
        assert!(nb.len() <= 2);
        let mut s = self.clone();
        for &n in &nb {
            s.w[n] += 1;
            s.unlink(v, n);
        }
        if let [a, b] = nb[..] {
            s.link(a, b);
        }
        let keep: Vec<usize> = (0..s.len()).filter(|&i| i != v).collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        Small {
            w: keep.iter().map(|&i| s.w[i]).collect(),
            adj: keep.iter().map(|&i| s.adj[i].iter().map(|j| pos[j]).collect()).collect(),
        }
    }

    pub fn legal_blowdowns(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.w[v] == -1 && self.adj[v].len() <= 2).collect()
    }

    fn code(&self, v: usize, parent: Option<usize>) -> String {
        let mut kids: Vec<String> =
            self.adj[v].iter().filter(|&&u| Some(u) != parent).map(|&u| self.code(u, Some(v))).collect();
        kids.sort();
        format!("({}{})", self.w[v], kids.concat())
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Isomorphism-invariant form of a weighted forest.
    pub fn canonical(&self) -> String {
        let mut parts: Vec<String> =
            self.components().iter().map(|c| c.iter().map(|&r| self.code(r, None)).min().unwrap()).collect();
        parts.sort();
        parts.join("|")
    }

    pub fn to_tree(&self) -> WeightedTree {
        let vertices: BTreeMap<usize, Vertex> =
            (0..self.len()).map(|i| (i, Vertex { weight: self.w[i], role: Role::Spine(i) })).collect();
        let mut edges = Vec::new();
        for a in 0..self.len() {
            for &b in &self.adj[a] {
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        WeightedTree::new(vertices, &edges).expect("a tree")
    }

    pub fn from_tree(t: &WeightedTree) -> (Small, Vec<usize>) {
        let ids: Vec<usize> = t.vertices().keys().copied().collect();
        let pos: HashMap<usize, usize> = ids.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut s = Small { w: ids.iter().map(|&i| t.weight(i)).collect(), adj: vec![BTreeSet::new(); ids.len()] };
        for (a, b) in t.edges() {
            s.link(pos[&a], pos[&b]);
        }
        (s, ids)
    }
}

/// Canonical forms of every state a maximal blowdown sequence can end in.
pub fn terminal_states(start: &Small) -> BTreeSet<String> {
    // the result of a blowdown sequence depends only on the set of
    // vertices removed, so exact (w, adj) keys are enough for the memo
    fn go(s: &Small, seen: &mut HashSet<(Vec<i64>, Vec<BTreeSet<usize>>)>, out: &mut BTreeSet<String>) {
        if !seen.insert((s.w.clone(), s.adj.clone())) {
            return;
        }
        let moves = s.legal_blowdowns();
        if moves.is_empty() {
            out.insert(s.canonical());
        }
        for v in moves {
            go(&s.blowdown(v), seen, out);
        }
    }
    let mut out = BTreeSet::new();
    go(start, &mut HashSet::new(), &mut out);
    out
}

/// Terminal form of a one-vertex 0-curve, i.e. a fiber.
pub fn zero_fiber_form() -> String {
    Small::single(0).canonical()
}

/// All fibers with at most `max` components, up to isomorphism, built by
/// blowing up `[[0]]`.
pub fn all_fibers(max: usize) -> Vec<Small> {
    let mut seen: HashSet<String> = HashSet::new();
    let mut layer = vec![Small::single(0)];
    seen.insert(layer[0].canonical());
    let mut out = layer.clone();
    for _ in 1..max {
        let mut next = Vec::new();
        for s in &layer {
            let mut cands: Vec<Small> = (0..s.len()).map(|v| s.blowup_vertex(v)).collect();
            for a in 0..s.len() {
                for &b in &s.adj[a] {
                    if a < b {
                        cands.push(s.blowup_edge(a, b));
                    }
                }
            }
            for c in cands {
                if seen.insert(c.canonical()) {
                    next.push(c);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Total transforms computed by contracting highest id first, `base` kept.
/// Returns coefficient vectors over the tree's ids, for every id but `base`.
pub fn total_transforms_oracle(t: &WeightedTree, base: usize) -> (Vec<usize>, BTreeMap<usize, Vec<i64>>) {
    let ids: Vec<usize> = t.vertices().keys().copied().collect();
    let pos: HashMap<usize, usize> = ids.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut w: BTreeMap<usize, i64> = ids.iter().map(|&i| (i, t.weight(i))).collect();
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = ids.iter().map(|&i| (i, t.neighbors(i).collect())).collect();
    let mut record: Vec<(usize, Vec<usize>)> = Vec::new();
    loop {
        let pick = w.iter().rev().find(|(&v, &x)| v != base && x == -1 && adj[&v].len() <= 2).map(|(&v, _)| v);
        let Some(v) = pick else { break };
        let nb: Vec<usize> = adj[&v].iter().copied().collect();
        for &n in &nb {
            *w.get_mut(&n).unwrap() += 1;
            adj.get_mut(&n).unwrap().remove(&v);
        }
        if let [a, b] = nb[..] {
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        w.remove(&v);
        adj.remove(&v);
        record.push((v, nb));
    }
    assert_eq!(w.len(), 1, "oracle contraction got stuck");
    let unit = |id: usize| {
        let mut z = vec![0i64; ids.len()];
        z[pos[&id]] = 1;
        z
    };
    let mut cycles: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for (v, nb) in record.iter().rev() {
        for z in cycles.values_mut() {
            z[pos[v]] = nb.iter().map(|n| z[pos[n]]).sum();
        }
        cycles.insert(*v, unit(*v));
    }
    (ids, cycles)
}

pub fn intersect(t: &WeightedTree, ids: &[usize], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for (x, &ix) in ids.iter().enumerate() {
        for (y, &iy) in ids.iter().enumerate() {
            if a[x] != 0 && b[y] != 0 {
                let m = if ix == iy {
                    t.weight(ix)
                } else if t.neighbors(ix).any(|n| n == iy) {
                    1
                } else {
                    0
                };
                s += a[x] * b[y] * m;
            }
        }
    }
    s
}

/// Mothers of the given feather vertices, via the oracle's total transforms.
pub fn mothers_oracle(f: &FiberGraph, hs: &[usize]) -> Vec<Vec<usize>> {
    let (ids, cycles) = total_transforms_oracle(f.tree(), f.spine_id(0));
    hs.iter()
        .map(|h| {
            (0..=f.last())
                .filter(|&i| {
                    let mut e = vec![0; ids.len()];
                    e[ids.iter().position(|&x| x == f.spine_id(i)).unwrap()] = 1;
                    intersect(f.tree(), &ids, &cycles[h], &e) == 1
                })
                .collect()
        })
        .collect()
}

/// Hirzebruch-Jung chain of `m/e` by repeated ceilings.
pub fn hj_oracle(e: i64, m: i64) -> Vec<i64> {
    let (mut num, mut den) = (m as i128, e as i128);
    let mut out = Vec::new();
    while den != 0 {
        let k = (num + den - 1).div_euclid(den);
        out.push(-(k as i64));
        let r = k * den - num;
        num = den;
        den = r;
    }
    out
}

/// `k_1 - 1/(k_2 - ...)` for the chain `[-k_1, ..., -k_n]`.
pub fn chain_value(chain: &[i64]) -> Rational {
    let mut acc: Option<Rational> = None;
    for &w in chain.iter().rev() {
        let k = Rational::from_int(-w);
        acc = Some(match acc {
            None => k,
            Some(x) => k - x.recip(),
        });
    }
    acc.expect("non-empty chain")
}
