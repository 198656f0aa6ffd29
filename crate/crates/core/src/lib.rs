pub mod dck;
pub mod galois;
pub mod gl2gwa;
pub mod gtsub;
pub mod perm;
pub mod scalar;
pub mod uq;
