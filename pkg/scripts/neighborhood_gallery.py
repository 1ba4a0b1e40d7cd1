"""Print ASCII portraits of the 2-D neighborhood families side by side."""

from __future__ import annotations

from nbhd import NeighborhoodSpec, diamond, enumerate_offsets, k_radius


def portrait(spec: NeighborhoodSpec, extent: int) -> list[str]:
    members = set(enumerate_offsets(spec))
    rows = []
    for a in range(-extent, extent + 1):
        cells = []
        for b in range(-extent, extent + 1):
            if (a, b) == (0, 0):
                cells.append("X")
            elif (a, b) in members:
                cells.append("o")
            else:
                cells.append(".")
        rows.append(" ".join(cells))
    return rows


def show(title: str, spec: NeighborhoodSpec, extent: int) -> None:
    print(f"{title}  ({len(enumerate_offsets(spec))} cells)")
    for row in portrait(spec, extent):
        print("  " + row)
    print()


def main() -> None:
    show("von Neumann", k_radius(2, 1), 2)
    show("Moore", k_radius(2, 2), 2)
    show("Moore, radius 2", k_radius(2, 2, 2), 3)
    show("Moore shell, radius 2", k_radius(2, 2, 2, sharp_r=True), 3)
    show("narrow von Neumann, radius 3", k_radius(2, 1, 3), 4)
    show("diamond, radius 3", diamond(2, 3), 4)
    show("diamond shell, radius 3", diamond(2, 3, sharp_r=True), 4)
    show("exactly-2 coordinates, radius 2", k_radius(2, 2, 2, sharp_k=True), 3)


if __name__ == "__main__":
    main()
