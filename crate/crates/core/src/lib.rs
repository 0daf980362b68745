pub mod catalog;
pub mod cli;
pub mod conjugation;
pub mod f2linalg;
pub mod gradedring;
pub mod maximality;
pub mod rodegree;
pub mod steenrod;
