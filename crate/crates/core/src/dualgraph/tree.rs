use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// What a vertex stands for inside a fiber or an extended divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    /// `C0`, `C1` of an extended divisor.
    Boundary(usize),
    /// `D_i` of a fiber, i.e. `C_{i+2}` of the zigzag.
    Spine(usize),
    /// Bridge of feather `f` (0-based).
    Bridge(usize),
    /// Component `k` of the box of feather `f`, counted from the bridge.
    Box(usize, usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Boundary(i) => write!(f, "C{i}"),
            Role::Spine(i) => write!(f, "D{i}"),
            Role::Bridge(j) => write!(f, "B{}", j + 1),
            Role::Box(j, k) => write!(f, "R{}_{}", j + 1, k + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub weight: i64,
    pub role: Role,
}

/// Connected acyclic weighted graph. Vertex ids are stable under
/// subgraph extraction, so they need not be contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTree {
    vertices: BTreeMap<usize, Vertex>,
    adj: BTreeMap<usize, BTreeSet<usize>>,
}

/// One blowdown: the contracted vertex and its neighbours at that moment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowdownStep {
    pub vertex: usize,
    pub neighbors: Vec<usize>,
}

impl WeightedTree {
    pub fn new(vertices: BTreeMap<usize, Vertex>, edges: &[(usize, usize)]) -> Result<WeightedTree> {
        let g = Graph::new(vertices, edges)?;
        if g.vertices.is_empty() {
            return Err(Error::BadGraph("empty tree".into()));
        }
        if edges.len() + 1 != g.vertices.len() || g.components().len() != 1 {
            return Err(Error::BadGraph("not a tree".into()));
        }
        Ok(WeightedTree { vertices: g.vertices, adj: g.adj })
    }

    /// Linear chain with ids `0..n` tagged as spine components.
    pub fn chain(weights: &[i64]) -> Result<WeightedTree> {
        let vertices =
            weights.iter().enumerate().map(|(i, &weight)| (i, Vertex { weight, role: Role::Spine(i) })).collect();
        let edges: Vec<_> = (1..weights.len()).map(|i| (i - 1, i)).collect();
        WeightedTree::new(vertices, &edges)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &BTreeMap<usize, Vertex> {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.get(&id)
    }

    pub fn weight(&self, id: usize) -> i64 {
        self.vertices[&id].weight
    }

    pub fn neighbors(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[&id].iter().copied()
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adj[&id].len()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.vertices.contains_key(&id)
    }

    pub fn find(&self, role: Role) -> Option<usize> {
        self.vertices.iter().find(|(_, v)| v.role == role).map(|(&id, _)| id)
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj.iter().flat_map(|(&a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b))).collect()
    }

    /// Self-intersection on the diagonal, 1 for adjacent vertices.
    pub fn intersection(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.weight(a)
        } else if self.adj[&a].contains(&b) {
            1
        } else {
            0
        }
    }

    /// Connected components after deleting `removed`.
    pub fn split(&self, removed: &BTreeSet<usize>) -> Vec<WeightedTree> {
        let keep: BTreeMap<_, _> =
            self.vertices.iter().filter(|(id, _)| !removed.contains(id)).map(|(&id, &v)| (id, v)).collect();
        let edges: Vec<_> =
            self.edges().into_iter().filter(|(a, b)| keep.contains_key(a) && keep.contains_key(b)).collect();
        let g = Graph::new(keep, &edges).expect("subgraph of a tree");
        g.components().into_iter().map(|ids| g.induced(&ids)).collect()
    }
}

/// Scratch graph used while contracting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Graph {
    pub(crate) vertices: BTreeMap<usize, Vertex>,
    pub(crate) adj: BTreeMap<usize, BTreeSet<usize>>,
}

impl Graph {
    fn new(vertices: BTreeMap<usize, Vertex>, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = vertices.keys().map(|&id| (id, BTreeSet::new())).collect();
        for &(a, b) in edges {
            if a == b || !vertices.contains_key(&a) || !vertices.contains_key(&b) {
                return Err(Error::BadGraph(format!("bad edge ({a},{b})")));
            }
            if !adj.get_mut(&a).unwrap().insert(b) {
                return Err(Error::BadGraph(format!("repeated edge ({a},{b})")));
            }
            adj.get_mut(&b).unwrap().insert(a);
        }
        Ok(Graph { vertices, adj })
    }

    pub(crate) fn from_tree(t: &WeightedTree) -> Graph {
        Graph { vertices: t.vertices.clone(), adj: t.adj.clone() }
    }

    fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in self.vertices.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if comp.insert(v) {
                    stack.extend(self.adj[&v].iter().copied());
                }
            }
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    fn induced(&self, ids: &BTreeSet<usize>) -> WeightedTree {
        WeightedTree {
            vertices: ids.iter().map(|id| (*id, self.vertices[id])).collect(),
            adj: ids.iter().map(|id| (*id, self.adj[id].clone())).collect(),
        }
    }

    pub(crate) fn can_blow_down(&self, v: usize) -> bool {
        self.vertices[&v].weight == -1 && self.adj[&v].len() <= 2
    }

    pub(crate) fn blow_down(&mut self, v: usize) -> Result<BlowdownStep> {
        let neighbors: Vec<usize> = self.adj[&v].iter().copied().collect();
        if let [a, b] = neighbors[..] {
            if self.adj[&a].contains(&b) {
                return Err(Error::NonSncContraction(v));
            }
        }
        self.vertices.remove(&v);
        self.adj.remove(&v);
        for &n in &neighbors {
            self.vertices.get_mut(&n).unwrap().weight += 1;
            self.adj.get_mut(&n).unwrap().remove(&v);
        }
        if let [a, b] = neighbors[..] {
            self.adj.get_mut(&a).unwrap().insert(b);
            self.adj.get_mut(&b).unwrap().insert(a);
        }
        Ok(BlowdownStep { vertex: v, neighbors })
    }

    /// Greedy blowdowns, lowest id first, never touching `protected`.
    pub(crate) fn contract_greedy(&mut self, protected: Option<usize>) -> Result<Vec<BlowdownStep>> {
        let mut record = Vec::new();
        loop {
            let next = self.vertices.keys().copied().find(|&v| Some(v) != protected && self.can_blow_down(v));
            match next {
                Some(v) => record.push(self.blow_down(v)?),
                None => return Ok(record),
            }
        }
    }
}

/// True iff every tree of the forest blows down to nothing.
pub fn is_contractible(forest: &[WeightedTree]) -> Result<bool> {
    for tree in forest {
        let mut g = Graph::from_tree(tree);
        g.contract_greedy(None)?;
        if !g.vertices.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Blows `tree` down greedily. Returns whether a single 0-vertex remains,
/// together with the blowdown record.
pub fn contracts_to_zero_fiber(tree: &WeightedTree) -> Result<(bool, Vec<BlowdownStep>)> {
    contract_fiber(tree, None)
}

/// As [`contracts_to_zero_fiber`], keeping `base` as the surviving vertex.
pub fn contract_fiber(tree: &WeightedTree, base: Option<usize>) -> Result<(bool, Vec<BlowdownStep>)> {
    let mut g = Graph::from_tree(tree);
    let record = g.contract_greedy(base)?;
    let ok = g.vertices.len() == 1 && g.vertices.values().next().unwrap().weight == 0;
    Ok((ok, record))
}
