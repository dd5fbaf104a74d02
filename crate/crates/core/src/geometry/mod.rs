//! Concrete subspaces of `ℝⁿ`: orthonormal frames, principal angles, the
//! chordal, Fubini–Study and angle distances, both embeddings of the
//! Grassmannian, distance spectra, and fixture configurations.

pub mod distance;
pub mod fixtures;
pub mod frame;
pub mod io;
pub mod spectrum;

pub use distance::{
    angle_distance, chordal_distance, chordal_distance_trace, chordal_from_angles, distance,
    fs_cosine, fs_from_angles, fubini_study_distance, principal_angles, principal_cosines, Metric,
};
pub use fixtures::{generate_configuration, Configuration};
pub use frame::{ProjectionMatrix, SubspaceFrame};
pub use io::FrameFile;
pub use spectrum::{distance_spectrum, pairwise_distances, DistanceSpectrum};
