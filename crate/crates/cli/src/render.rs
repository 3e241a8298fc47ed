//! Text rendering of the square diagram.
//!
//! The `g x g` cells are printed top row first, so the origin sits at the
//! bottom left. In each column the cells whose left edge lies on an up step
//! of the path are marked `^`, and the cell directly under that column's
//! right step is marked `>` instead. Everything else is `.`. Column heights
//! can be read back off the `>` marks, so the picture determines the path.

use squarediagram::DyckPath;

pub const EMPTY_DIAGRAM: &str = "(empty diagram)";

/// Renders `path` as a grid, optionally drawing the antidiagonal from
/// `(0, g-1)` to `(g-1, 0)` with `\` on background cells.
pub fn render(path: &DyckPath, antidiagonal: bool) -> String {
    let g = path.order();
    if g == 0 {
        return format!("{EMPTY_DIAGRAM}\n");
    }
    // grid[y][x]
    let mut grid = vec![vec!['.'; g]; g];
    if antidiagonal {
        // Cells crossed by the segment x + y = g - 1.
        for x in 0..g - 1 {
            grid[g - 2 - x][x] = '\\';
        }
    }
    let heights = path.column_heights();
    let mut prev = 0;
    for (x, &h) in heights.iter().enumerate() {
        for row in grid.iter_mut().take(h).skip(prev) {
            row[x] = '^';
        }
        grid[h - 1][x] = '>';
        prev = h;
    }
    let mut out = String::with_capacity(g * (g + 1));
    for row in grid.iter().rev() {
        out.extend(row.iter());
        out.push('\n');
    }
    out
}
