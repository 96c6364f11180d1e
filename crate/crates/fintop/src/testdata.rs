//! Sample spaces shared across unit tests, loaded from the same files the
//! runnable examples use.

use crate::space::{parse_space, FiniteSpace};

pub fn ex15() -> FiniteSpace {
    parse_space(include_str!("../data/ex15.top")).unwrap()
}

pub fn ex16() -> FiniteSpace {
    parse_space(include_str!("../data/ex16.top")).unwrap()
}

pub fn ex23() -> FiniteSpace {
    parse_space(include_str!("../data/ex23.top")).unwrap()
}

/// Three points, opens {}, {a}, {b}, {a,b}, X. The smallest space where the
/// intersection of two c*-closed sets fails to be c*-closed.
pub fn wedge3() -> FiniteSpace {
    parse_space("points: a b c\nopen:\nopen: a\nopen: b\nopen: a b\nopen: *\n").unwrap()
}

/// Two points with the opens {}, {a}, X; carries the smallest set that is
/// generalized-closed in the starred sense without being g-closed.
pub fn sierpinski() -> FiniteSpace {
    parse_space("points: a b\nopen:\nopen: a\nopen: *\n").unwrap()
}
