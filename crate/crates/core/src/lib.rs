pub mod catalog;
pub mod cli;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod quandle;
pub mod quiver;
pub mod table;
mod union_find;

pub use catalog::{Catalog, CatalogEntry};
pub use coloring::{ArcClasses, Coloring};
pub use diagram::{MarkedGraphDiagram, Node, Sign};
pub use error::{Error, Result};
pub use quandle::{Quandle, QuandleMap};
pub use quiver::{InDegreePolynomial, Quiver};
