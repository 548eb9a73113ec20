//! Reading and writing maps.
//!
//! The native text format stores the rotation system verbatim, so any map —
//! coloured or not, quadrangulation or not — round-trips exactly. The
//! planar_code binary format is provided for interchange with other planar
//! graph tools and covers simple maps only; DOT output is for looking at
//! maps, not for reading them back.

mod dot;
mod mq;
mod planar_code;

pub use dot::write_dot;
pub use mq::{read_mq, read_mq_any, read_mq_stream, write_mq};
pub use planar_code::{read_planar_code, write_planar_code};
