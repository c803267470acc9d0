//! Partitions, skew shapes, Young's lattice and standard skew tableaux.

mod partition;
mod skew;
mod tableau;

pub use partition::{contains, young_successors, Partition};
pub use skew::{axial_distance, content, is_horizontal_strip, Cell, SkewShape};
pub use tableau::{count_skew_tableaux, enumerate_skew_tableaux, SkewTableau};

/// Every skew shape `μ/λ` with `|μ| ≤ max_outer` and
/// `min_boxes ≤ |μ/λ| ≤ max_boxes`, ordered by outer shape then inner shape.
pub fn skew_shapes(max_outer: usize, min_boxes: usize, max_boxes: usize) -> Vec<SkewShape> {
    Partition::all_up_to(max_outer)
        .into_iter()
        .flat_map(|mu| {
            let size = mu.size();
            mu.subpartitions()
                .into_iter()
                .filter(move |lam| (min_boxes..=max_boxes).contains(&(size - lam.size())))
                .map(move |lam| SkewShape::new(lam, mu.clone()).expect("subpartition"))
                .collect::<Vec<_>>()
        })
        .collect()
}
