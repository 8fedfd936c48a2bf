use std::collections::HashMap;

use crate::error::{Error, Result};

/// Display labels for the points `0..n` of a permutation domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDomain {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabeledDomain {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate label {l:?}")));
            }
        }
        Ok(LabeledDomain { labels, index })
    }

    /// Points labelled by their own index.
    pub fn natural(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect()).expect("indices are distinct")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels.get(i).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let d = LabeledDomain::new(vec!["a".into(), "b".into()]).unwrap();
        assert_eq!(d.size(), 2);
        assert_eq!(d.label(1), Some("b"));
        assert_eq!(d.index_of("a"), Some(0));
        assert_eq!(d.index_of("c"), None);
        assert!(LabeledDomain::new(vec!["a".into(), "a".into()]).is_err());
        assert_eq!(LabeledDomain::natural(3).labels(), ["0", "1", "2"]);
    }
}
