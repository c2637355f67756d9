//! Dart graphs, rotation systems, facial walks, and exhaustive embedding
//! enumeration.

mod embedding;
mod enumerate;
mod graph;

pub use embedding::{euler_genus, genus, trace_faces, FaceCounter, FaceSet, RotationSystem};
pub use enumerate::{
    count_embeddings, enumerate_embeddings, genus_distribution_bruteforce, partition, BruteForce,
    Enumerator, GenusDist, DEFAULT_BUDGET,
};
pub use graph::{Dart, DartGraph};

pub(crate) use enumerate::{add_counts, cyclic_orders, write_order};
