//! Desk-scale learning-based point cloud codec.
//!
//! Geometry is coded with a sparse convolutional autoencoder plus a
//! variational hyperprior: the latent residue is entropy coded with rANS
//! under a zero-mean Gaussian model whose scales come from a bit-exact
//! fixed-point synthesis pass, latent coordinates are coded losslessly
//! with an octree coder, and an optional sparse U-net performs decoder-side
//! super-resolution. Color is coded by recoloring the decoded geometry,
//! projecting it onto packed 2D images and handing those to a pluggable
//! image codec. The crate also ships the matching quality metrics
//! (D1/D2/Y/YUV PSNR, density/homogeneity/gamut characterization,
//! Bjontegaard deltas) and a CPU trainer with reverse-mode gradients for
//! every sparse layer.
//!
//! Core numeric code is generic over the scalar type via [`Scalar`]
//! (`f32` or `f64`); concrete aliases live at the crate root.

pub mod color;
pub mod entropy;
pub mod geometry;
pub mod kdtree;
pub mod linalg;
pub mod metrics;
pub mod octree;
pub mod ply;
pub mod pointcloud;
pub mod scalar;
pub mod sparse;
pub mod training;

pub use pointcloud::{Block, PointCloud};
pub use scalar::Scalar;

/// Sparse tensor with `f32` features (codec default).
pub type SparseTensor32 = sparse::SparseTensor<f32>;
/// Sparse tensor with `f64` features (training / gradient checking).
pub type SparseTensor64 = sparse::SparseTensor<f64>;
/// Coding model with `f32` weights.
pub type CodingModel32 = sparse::CodingModel<f32>;
/// Coding model with `f64` weights.
pub type CodingModel64 = sparse::CodingModel<f64>;
/// Super-resolution model with `f32` weights.
pub type SrModel32 = sparse::SrModel<f32>;
/// Super-resolution model with `f64` weights.
pub type SrModel64 = sparse::SrModel<f64>;
