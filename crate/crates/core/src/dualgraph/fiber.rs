use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::exactmath::Rational;

use super::tree::{contract_fiber, BlowdownStep, Role, Vertex, WeightedTree};
use super::zigzag::Zigzag;

/// A bridge curve followed by a (possibly empty) box chain; the first box
/// component meets the bridge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Feather {
    pub bridge_weight: i64,
    pub box_chain: Vec<i64>,
}

impl Feather {
    pub fn new(bridge_weight: i64, box_chain: Vec<i64>) -> Result<Feather> {
        if bridge_weight > -1 || box_chain.iter().any(|&w| w > -2) {
            return Err(Error::BadGraph(format!("feather [{bridge_weight}|{box_chain:?}] has a bad weight")));
        }
        Ok(Feather { bridge_weight, box_chain })
    }

    pub fn bridge(bridge_weight: i64) -> Feather {
        Feather::new(bridge_weight, Vec::new()).expect("bridge weight <= -1")
    }

    pub fn len(&self) -> usize {
        1 + self.box_chain.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `[[-1,(-2)_k]]`.
    pub fn is_a_feather(&self) -> bool {
        self.bridge_weight == -1 && self.box_chain.iter().all(|&w| w == -2)
    }
}

/// The degenerate fiber `D_0 + ... + D_N + feathers`. Vertex ids: the spine
/// takes `0..=N`, then each feather its bridge followed by its box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberGraph {
    spine: Vec<i64>,
    feathers: Vec<(usize, Feather)>,
    tree: WeightedTree,
    record: Vec<BlowdownStep>,
}

impl FiberGraph {
    pub fn new(spine: Vec<i64>, feathers: Vec<(usize, Feather)>) -> Result<FiberGraph> {
        let tree = build_tree(&spine, &feathers)?;
        let (ok, record) = contract_fiber(&tree, Some(0))?;
        if !ok {
            return Err(Error::NotAFiber);
        }
        Ok(FiberGraph { spine, feathers, tree, record })
    }

    pub fn spine(&self) -> &[i64] {
        &self.spine
    }

    /// Index `N` of the last spine component.
    pub fn last(&self) -> usize {
        self.spine.len() - 1
    }

    pub fn feathers(&self) -> &[(usize, Feather)] {
        &self.feathers
    }

    pub fn feathers_at(&self, i: usize) -> impl Iterator<Item = (usize, &Feather)> + '_ {
        self.feathers.iter().enumerate().filter(move |(_, (at, _))| *at == i).map(|(j, (_, f))| (j, f))
    }

    pub fn tree(&self) -> &WeightedTree {
        &self.tree
    }

    pub fn record(&self) -> &[BlowdownStep] {
        &self.record
    }

    pub fn spine_id(&self, i: usize) -> usize {
        i
    }

    pub fn bridge_id(&self, feather: usize) -> usize {
        self.tree.find(Role::Bridge(feather)).expect("feather exists")
    }

    /// All components of `f ⊖ D_i` not containing `D_0`.
    pub fn subgraph_gt(&self, i: usize) -> Vec<WeightedTree> {
        let parts = self.tree.split(&BTreeSet::from([i]));
        if i == 0 {
            parts
        } else {
            parts.into_iter().filter(|t| !t.contains(0)).collect()
        }
    }

    /// Component of `f ⊖ D_{i-1}` containing `D_i`: the spine tail from `D_i`
    /// with its feathers. Empty when `i > N`.
    pub fn subgraph_ge(&self, i: usize) -> Option<WeightedTree> {
        if i == 0 {
            return Some(self.tree.clone());
        }
        if i > self.last() {
            return None;
        }
        self.tree.split(&BTreeSet::from([i - 1])).into_iter().find(|t| t.contains(i))
    }

    /// Total transforms of all components except `D_0`.
    pub fn total_transforms(&self) -> TotalTransforms {
        let ids: Vec<usize> = self.tree.vertices().keys().copied().collect();
        let pos: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(k, &id)| (id, k)).collect();
        let mut cycles: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
        let unit = |id: usize| {
            let mut v = vec![0; ids.len()];
            v[pos[&id]] = 1;
            v
        };
        let base =
            ids.iter().copied().find(|id| !self.record.iter().any(|s| s.vertex == *id)).expect("one vertex survives");
        cycles.insert(base, unit(base));
        for step in self.record.iter().rev() {
            let at = pos[&step.vertex];
            for z in cycles.values_mut() {
                z[at] = step.neighbors.iter().map(|n| z[pos[n]]).sum();
            }
            cycles.insert(step.vertex, unit(step.vertex));
        }
        cycles.remove(&base);
        TotalTransforms { ids, cycles }
    }

    /// Intersection number of two cycles given over `TotalTransforms::ids`.
    pub fn dot(&self, ids: &[usize], a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (x, &ix) in ids.iter().enumerate() {
            if a[x] == 0 {
                continue;
            }
            for (y, &iy) in ids.iter().enumerate() {
                if b[y] != 0 {
                    s += a[x] * b[y] * self.tree.intersection(ix, iy);
                }
            }
        }
        s
    }

    /// `H~ . D_i` for a created component `h`.
    pub fn dot_spine(&self, tt: &TotalTransforms, h: usize, i: usize) -> i64 {
        let z = &tt.cycles[&h];
        tt.ids.iter().zip(z).filter(|(_, &c)| c != 0).map(|(&id, &c)| c * self.tree.intersection(id, i)).sum()
    }
}

/// Total-transform cycles, as coefficient vectors over `ids`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalTransforms {
    pub ids: Vec<usize>,
    pub cycles: BTreeMap<usize, Vec<i64>>,
}

impl TotalTransforms {
    pub fn coefficient(&self, of: usize, on: usize) -> i64 {
        let k = self.ids.iter().position(|&id| id == on).expect("known id");
        self.cycles[&of][k]
    }
}

pub fn total_transforms(f: &FiberGraph) -> TotalTransforms {
    f.total_transforms()
}

pub fn subgraph_gt(f: &FiberGraph, i: usize) -> Vec<WeightedTree> {
    f.subgraph_gt(i)
}

pub fn subgraph_ge(f: &FiberGraph, i: usize) -> Option<WeightedTree> {
    f.subgraph_ge(i)
}

fn build_tree(spine: &[i64], feathers: &[(usize, Feather)]) -> Result<WeightedTree> {
    if spine.is_empty() {
        return Err(Error::BadGraph("empty spine".into()));
    }
    let mut vertices = BTreeMap::new();
    let mut edges = Vec::new();
    for (i, &w) in spine.iter().enumerate() {
        vertices.insert(i, Vertex { weight: w, role: Role::Spine(i) });
        if i > 0 {
            edges.push((i - 1, i));
        }
    }
    let mut next = spine.len();
    for (j, (at, f)) in feathers.iter().enumerate() {
        if *at >= spine.len() {
            return Err(Error::BadGraph(format!("feather attached at D{at} beyond the spine")));
        }
        Feather::new(f.bridge_weight, f.box_chain.clone())?;
        vertices.insert(next, Vertex { weight: f.bridge_weight, role: Role::Bridge(j) });
        edges.push((*at, next));
        let mut prev = next;
        next += 1;
        for (k, &w) in f.box_chain.iter().enumerate() {
            vertices.insert(next, Vertex { weight: w, role: Role::Box(j, k) });
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    WeightedTree::new(vertices, &edges)
}

/// Where a feather of a ℂ*-surface comes from: the point of the affine line,
/// and whether it is the feather `F_0` sitting at the end of the zigzag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeatherOrigin {
    pub point: Rational,
    pub tail: bool,
}

/// Boundary `C0 + C1` followed by a fiber whose spine continues the zigzag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedDivisor {
    pub fiber: FiberGraph,
    /// Zigzag position of the parabolic component `C_s`, if any.
    pub s_index: Option<usize>,
    /// One entry per feather when built from divisor data, else empty.
    pub origins: Vec<FeatherOrigin>,
}

impl ExtendedDivisor {
    pub fn new(fiber: FiberGraph) -> ExtendedDivisor {
        ExtendedDivisor { fiber, s_index: None, origins: Vec::new() }
    }

    pub fn zigzag(&self) -> Zigzag {
        let mut w = vec![0, 0];
        w.extend_from_slice(self.fiber.spine());
        Zigzag(w)
    }

    /// Fiber index of the zigzag component `C_i`.
    pub fn fiber_index(zigzag_index: usize) -> usize {
        zigzag_index - 2
    }

    /// Whole configuration as a tree; `C0`, `C1` get ids after the fiber.
    pub fn tree(&self) -> WeightedTree {
        let t = self.fiber.tree();
        let mut vertices: BTreeMap<usize, Vertex> = t.vertices().clone();
        let c0 = t.vertices().keys().max().unwrap() + 1;
        vertices.insert(c0, Vertex { weight: 0, role: Role::Boundary(0) });
        vertices.insert(c0 + 1, Vertex { weight: 0, role: Role::Boundary(1) });
        let mut edges = t.edges();
        edges.push((c0, c0 + 1));
        edges.push((c0 + 1, 0));
        WeightedTree::new(vertices, &edges).expect("tree")
    }
}
