use serde::{Deserialize, Serialize};

use super::{ceil_log2, InwParams};

/// Symbolic resource estimate for streaming the generator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostModel {
    pub seed_bits: usize,
    /// Label, leaf index and one block of extractor workspace.
    pub space_bits: usize,
    pub step_costs: Vec<HeightCost>,
    /// Full DFS: Σ_i vertices_i · cost_i, plus one op per emitted bit.
    pub total_ops: u64,
    /// One root-to-leaf walk: 1 + Σ_i cost_i.
    pub coordinate_ops: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeightCost {
    pub height: usize,
    /// min(2^{M−i+2}, ⌈4T / 2^i⌉).
    pub vertices: u64,
    /// i · N² · log₂²N.
    pub cost_per_vertex: u64,
}

pub fn cost_model(params: &InwParams) -> CostModel {
    let n = params.block_len as u64;
    let depth = params.depth;
    let t = params.output_len as u64;
    let log_n = ceil_log2(params.block_len) as u64;
    let polylog = log_n * log_n;
    let step_costs: Vec<HeightCost> = (1..=depth)
        .map(|i| {
            let cap = 1u64 << (depth - i + 2);
            let by_len = (4 * t).div_ceil(1u64 << i);
            HeightCost { height: i, vertices: cap.min(by_len), cost_per_vertex: i as u64 * n * n * polylog }
        })
        .collect();
    let total_ops = step_costs.iter().map(|c| c.vertices * c.cost_per_vertex).sum::<u64>() + t;
    let coordinate_ops = 1 + step_costs.iter().map(|c| c.cost_per_vertex).sum::<u64>();
    CostModel {
        seed_bits: params.seed_bits(),
        space_bits: params.seed_bits() + depth + params.block_len,
        step_costs,
        total_ops,
        coordinate_ops,
    }
}
