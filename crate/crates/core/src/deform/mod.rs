//! Explicit deformations: cyclic and symmetric forms, the deformed `C_2`
//! idempotents, the two-stage `F_2[C_2 ≀ C_2]` example and the deformed
//! `S_{n+1}` action matrices.

mod cyclic;
mod section11;
mod section3;

pub use cyclic::*;
pub use section11::*;
pub use section3::*;
