pub mod canny_emiris;
pub mod error;
mod hull;
pub mod lattice;
pub mod macaulay;
pub mod mixedforms;
pub mod num;
pub mod polyring;
pub mod polytope;
pub mod report;
pub mod resultant;
pub mod subdivision;
