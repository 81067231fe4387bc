//! Plain-text drawings of hook tableaux in node-and-edge style.
//!
//! Each cell occupies one glyph followed by one separator column, and rows
//! are separated by an edge row, so hook edges draw as `-` and `|`:
//!
//! ```text
//! O-O-O-O-#
//!
//! * *-*
//!   |
//! *-* *
//!     |
//! *-*-*
//! ```

use std::collections::BTreeMap;

use crate::partitions::Cell;
use crate::tableaux::RimHook;

/// A drawing surface keyed by cell.
pub struct Canvas {
    glyphs: BTreeMap<Cell, String>,
    hooks: Vec<Vec<Cell>>,
}

impl Canvas {
    pub fn new() -> Self {
        Canvas {
            glyphs: BTreeMap::new(),
            hooks: Vec::new(),
        }
    }

    /// Places `glyph` at `cell`, replacing any previous glyph.
    pub fn put(&mut self, cell: Cell, glyph: impl Into<String>) -> &mut Self {
        self.glyphs.insert(cell, glyph.into());
        self
    }

    /// Draws the hook's nodes as `node` (unless already placed) and its edges.
    pub fn hook(&mut self, hook: &RimHook, node: &str) -> &mut Self {
        for &c in hook.cells() {
            self.glyphs.entry(c).or_insert_with(|| node.to_string());
        }
        self.hooks.push(hook.cells().to_vec());
        self
    }

    pub fn render(&self) -> String {
        let width = self
            .glyphs
            .values()
            .map(|g| g.chars().count())
            .max()
            .unwrap_or(1)
            .max(1);
        let pitch = width + 1;
        let rows = self.glyphs.keys().map(|c| c.row).max().unwrap_or(0);
        let cols = self.glyphs.keys().map(|c| c.col).max().unwrap_or(0);
        if rows == 0 {
            return String::new();
        }
        let height = 2 * rows - 1;
        let line_len = pitch * cols;
        let mut grid = vec![vec![' '; line_len]; height];
        for (cell, glyph) in &self.glyphs {
            let y = 2 * (cell.row - 1);
            let x = pitch * (cell.col - 1);
            let pad = width - glyph.chars().count();
            for (k, ch) in glyph.chars().enumerate() {
                grid[y][x + pad + k] = ch;
            }
        }
        for cells in &self.hooks {
            for w in cells.windows(2) {
                let (a, b) = (w[0], w[1]);
                if a.row == b.row {
                    let y = 2 * (a.row - 1);
                    grid[y][pitch * (a.col - 1) + width] = '-';
                } else {
                    let y = 2 * (a.row - 1) - 1;
                    grid[y][pitch * (a.col - 1) + width - 1] = '|';
                }
            }
        }
        let mut out = String::new();
        for line in grid {
            let s: String = line.into_iter().collect();
            out.push_str(s.trim_end());
            out.push('\n');
        }
        out
    }
}

impl Default for Canvas {
    fn default() -> Self {
        Canvas::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook(cells: &[(usize, usize)]) -> RimHook {
        RimHook::new(cells.iter().map(|&(r, c)| Cell::new(r, c)).collect()).unwrap()
    }

    #[test]
    fn draws_edges_between_hook_nodes() {
        let mut canvas = Canvas::new();
        canvas
            .hook(&hook(&[(1, 1)]), "*")
            .hook(&hook(&[(2, 1), (2, 2), (1, 2), (1, 3)]), "*")
            .hook(&hook(&[(5, 1), (4, 1), (3, 1), (3, 2)]), "*");
        let expected = "\
* *-*
  |
*-*

*-*
|
*
|
*
";
        assert_eq!(canvas.render(), expected);
    }

    #[test]
    fn wide_labels() {
        let mut canvas = Canvas::new();
        canvas.put(Cell::new(1, 1), "10").put(Cell::new(1, 2), "3");
        canvas.hook(&hook(&[(1, 1), (1, 2)]), "*");
        assert_eq!(canvas.render(), "10- 3\n");
    }
}
