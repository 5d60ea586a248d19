//! Weighted dual graphs: zigzags, feathers, fibers and extended divisors.

mod fiber;
mod render;
mod tree;
mod zigzag;

pub use fiber::{
    subgraph_ge, subgraph_gt, total_transforms, ExtendedDivisor, Feather, FeatherOrigin, FiberGraph, TotalTransforms,
};
pub use render::{ext_to_dot, render_ascii, to_dot};
pub use tree::{contract_fiber, contracts_to_zero_fiber, is_contractible, BlowdownStep, Role, Vertex, WeightedTree};
pub use zigzag::{reverse_zigzag, Zigzag};
