//! Serialization helpers for reports.

use std::fmt::Display;

use serde::Serializer;

/// Serializes a value through its `Display` form.
pub fn display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Serializes a sequence of displayable values as strings.
pub fn display_seq<'a, T, I, S>(items: I, s: S) -> Result<S::Ok, S::Error>
where
    T: Display + 'a,
    I: IntoIterator<Item = &'a T>,
    S: Serializer,
{
    s.collect_seq(items.into_iter().map(|x| x.to_string()))
}

/// Like [`display_seq`], in printed order.
pub fn display_sorted<'a, T, I, S>(items: I, s: S) -> Result<S::Ok, S::Error>
where
    T: Display + 'a,
    I: IntoIterator<Item = &'a T>,
    S: Serializer,
{
    let mut v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    v.sort();
    s.collect_seq(v)
}
