"""Unit tests for the tree property checklist."""

import pytest

from deformed_laplacian.domain.errors import ParameterError, StructureError
from deformed_laplacian.domain.graph import Graph, cycle, path, root_and_order, star, starlike
from deformed_laplacian.domain.tree_properties import (
    FAIL,
    FLAGGED,
    NOT_APPLICABLE,
    PASS,
    check_tree_properties,
)


@pytest.mark.parametrize(
    "tree", [path(2), path(5), star(3), star(6), starlike(1, 2, 3), starlike(2, 2, 2, 2)]
)
@pytest.mark.parametrize("s", [-1.5, -1.0, -0.5, 0.5, 1.0, 1.5])
def test_checklist_passes_on_small_trees(tree: Graph, s: float) -> None:
    """Test that no item fails on a range of trees and parameters."""
    report = check_tree_properties(root_and_order(tree, 0), s)

    assert report.passed
    assert [check.item for check in report.checks] == [1, 2, 3, 4, 5, 6, 7]


def test_zero_eigenvalue_item() -> None:
    """Test item 1 at s = 1 and s = 0.5."""
    at_one = check_tree_properties(root_and_order(path(4), 0), 1.0).item(1)
    at_half = check_tree_properties(root_and_order(path(4), 0), 0.5).item(1)

    assert at_one.status == PASS
    assert at_one.values["zero_multiplicity"] == 1
    assert at_half.values["zero_multiplicity"] == 0


def test_positive_definite_item() -> None:
    """Test item 2 below and above |s| = 1."""
    tree = root_and_order(star(4), 0)

    assert check_tree_properties(tree, 0.5).item(2).values["positive_definite"] is True
    assert check_tree_properties(tree, 1.5).item(2).values["positive_definite"] is False


def test_degenerate_s_marks_strict_items() -> None:
    """Test that items 3 to 6 are not applicable at s = 0."""
    report = check_tree_properties(root_and_order(star(5), 0), 0.0)

    assert report.passed
    for item in (3, 4, 5, 6):
        assert report.item(item).status == NOT_APPLICABLE


def test_pendant_p2_item() -> None:
    """Test item 4 applies only when a pendant P2 exists."""
    assert check_tree_properties(root_and_order(star(4), 0), 1.0).item(4).status == NOT_APPLICABLE
    assert check_tree_properties(root_and_order(path(5), 0), 1.0).item(4).status == PASS


def test_high_degree_item() -> None:
    """Test item 6 on a star with maximum degree 4."""
    check = check_tree_properties(root_and_order(star(4), 0), 1.0).item(6)

    assert check.status == PASS
    assert check.values["delta"] == 4
    assert check.values["lambda_max"] > check.values["threshold"]


def test_sqrt3_variant_is_flagged_not_failed() -> None:
    """Test the weaker degree-3 threshold on the claw at a small s."""
    report = check_tree_properties(root_and_order(star(3), 0), 0.1)
    check = report.item(6)

    assert check.status in (PASS, FLAGGED)
    assert check.status != FAIL
    assert report.passed


def test_starlike_item() -> None:
    """Test item 7 on starlike trees and its absence on paths."""
    report = check_tree_properties(root_and_order(starlike(2, 3, 4), 0), 1.2)

    assert report.item(7).status == PASS
    assert report.item(7).values["bound"] >= report.item(7).values["lambda_max"]
    assert check_tree_properties(root_and_order(path(4), 0), 1.2).item(7).status == NOT_APPLICABLE


def test_format_and_serialization() -> None:
    """Test console rendering and dictionaries."""
    report = check_tree_properties(root_and_order(path(3), 0), 1.0)

    text = report.format_console(precision=6)
    data = report.item(3).to_dict()

    assert text.splitlines()[0] == "tree n=3 s=1"
    assert "(1) [pass]" in text
    assert data["item"] == 3
    assert data["status"] == PASS
    assert data["lambda_max"] == pytest.approx(3.0)


def test_rejects_small_tree() -> None:
    """Test that a single vertex is rejected."""
    with pytest.raises(ParameterError):
        check_tree_properties(root_and_order(Graph(n=1), 0), 1.0)


def test_rejects_non_tree() -> None:
    """Test that a rooted structure over a cycle cannot be built."""
    with pytest.raises(StructureError):
        check_tree_properties(root_and_order(cycle(4), 0), 1.0)
