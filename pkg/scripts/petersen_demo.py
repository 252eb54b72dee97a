#!/usr/bin/env python3
"""Walk through the Petersen graph: K5 minor, no K5 subdivision, K3,3 subdivision."""

from minorkit import (
    chromatic_number,
    complete,
    complete_bipartite,
    find_minor_model,
    find_subdivision,
    is_planar,
    kuratowski_witness,
    model_to_edit_sequence,
    petersen,
    vertex_connectivity,
)
from minorkit.formats import emit_dot, format_branch_sets, format_edits, format_witness


def main() -> None:
    p = petersen()
    model = find_minor_model(p, complete(5))
    print("K5 model (contract each pair):")
    print(format_branch_sets(model), end="")
    print("edit sequence:")
    print(format_edits(model_to_edit_sequence(model)), end="")
    print("K5 subdivision:", find_subdivision(p, complete(5)))
    print("K3,3 subdivision found:", find_subdivision(p, complete_bipartite(3, 3)) is not None)
    print("planar:", is_planar(p), "kappa:", vertex_connectivity(p), "chi:", chromatic_number(p))
    print(format_witness(kuratowski_witness(p)), end="")
    with open("petersen_k5.dot", "w", encoding="utf-8") as out:
        out.write(emit_dot(p, model))
    print("wrote petersen_k5.dot")


if __name__ == "__main__":
    main()
