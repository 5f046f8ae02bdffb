pub mod convex2d;
pub mod convex3d;
pub mod error;
pub mod figure;
pub mod hset;
pub mod interval;
pub mod kernel;
pub mod point_sg;
pub mod quad;
pub mod report;
pub mod segments;

pub use error::{Error, Result};
pub use quad::{QuadNum, Rat};
