use alloc::vec::Vec;

use serde::Serialize;

use crate::linalg::FieldSpec;

/// `lambda_{i,j}` for `0 <= i, j <= d`; rows are `i`, columns `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LyubeznikTable {
    d: usize,
    field: FieldSpec,
    entries: Vec<Vec<usize>>,
}

impl LyubeznikTable {
    /// `entries` must be `(d+1) x (d+1)`.
    pub fn new(d: usize, entries: Vec<Vec<usize>>, field: FieldSpec) -> Self {
        assert!(entries.len() == d + 1 && entries.iter().all(|r| r.len() == d + 1), "table must be square of size d+1");
        LyubeznikTable { d, field, entries }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// Zero outside `0..=d`, negative indices included.
    pub fn get(&self, i: isize, j: isize) -> usize {
        if i < 0 || j < 0 || i as usize > self.d || j as usize > self.d {
            return 0;
        }
        self.entries[i as usize][j as usize]
    }

    /// `lambda_{d,d}`.
    pub fn highest(&self) -> usize {
        self.entries[self.d][self.d]
    }

    pub fn is_trivial(&self) -> bool {
        is_trivial_table(self)
    }

    /// `(i, j, value)` for every nonzero entry, row by row.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    out.push((i, j, v));
                }
            }
        }
        out
    }
}

/// `lambda_{d,d} = 1` and every other entry is zero.
pub fn is_trivial_table(t: &LyubeznikTable) -> bool {
    t.nonzero_entries() == [(t.d, t.d, 1)]
}
