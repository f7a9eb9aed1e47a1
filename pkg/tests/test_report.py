from henonshoe.symbolic import build_graph, project, theorem2_report

E = build_graph("E")

EXPECTED_TOPS_X = {"0001", "0011", "0100", "1011", "1100", "1110"}
EXPECTED_TOPS_Y = {"0010", "0110", "0111", "1000", "1001", "1101"}


def test_report_passes_all_assertions():
    report = theorem2_report()
    assert report.passed
    assert report.witnesses == ()
    names = [name for name, _ in report.assertions]
    assert names == [
        "two_classes",
        "shift_swaps_classes",
        "symbol_swap_preserves_classes",
        "bottom_words_distinguish_classes",
        "f_image_meets_first_class",
        "f_image_meets_second_class",
    ]
    assert all(value for _, value in report.assertions)


def test_twelve_period4_points():
    report = theorem2_report()
    assert report.period4_count == 12
    assert len(report.class_x) == 6
    assert len(report.class_y) == 6


def test_bottom_projections_exactly():
    report = theorem2_report()
    assert report.pi_g_x == frozenset({"0012", "1200", "2121"})
    assert report.pi_g_y == frozenset({"0120", "1212", "2001"})


def test_class_tops_exactly():
    report = theorem2_report()
    tops_x = {project(p, "E").as_string() for p in report.class_x}
    tops_y = {project(p, "E").as_string() for p in report.class_y}
    assert tops_x == EXPECTED_TOPS_X
    assert tops_y == EXPECTED_TOPS_Y


def test_shift_example_0001_lands_in_second_class():
    report = theorem2_report()
    (path,) = [p for p in report.class_x if project(p, "E").as_string() == "0001"]
    assert path.shift() in report.class_y
    assert project(path.shift(), "E").as_string() == "0010"


def test_swap_example_0001_stays_in_first_class():
    report = theorem2_report()
    tops_x = {project(p, "E").as_string() for p in report.class_x}
    assert "0001" in tops_x and "1110" in tops_x
