//! Line-oriented text formats for groups, class data and certificates.

mod certificate;
mod class_data;
mod group_file;

pub use certificate::{parse_certificate, parse_certificates, serialize_certificate, serialize_certificates};
pub use class_data::{load_class_data_dir, parse_class_data, serialize_class_data};
pub use group_file::{parse_group_file, read_group_file, serialize_group};

/// Non-empty lines with comments removed, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = match l.find('#') {
            Some(p) => &l[..p],
            None => l,
        }
        .trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}
