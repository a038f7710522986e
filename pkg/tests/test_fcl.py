import pytest

import paps
from paps.fcl import FclError, parse_rulebase

SMALL = """\
VAR_INPUT impact
    RANGE := (0.0 .. 1.0);
    TERM low := (0, 0, 0.25, 0.5);
    TERM high := (0.5, 0.75, 1, 1);
END_VAR
VAR_INPUT cost
    RANGE := (0.0 .. 1.0);
    TERM low := (0, 0, 0.25, 0.5);
    TERM high := (0.5, 0.75, 1, 1);
END_VAR
VAR_INPUT tech
    RANGE := (0.0 .. 1.0);
    TERM low := (0, 0, 0.25, 0.5);
    TERM high := (0.5, 0.75, 1, 1);
END_VAR
VAR_OUTPUT priority
    RANGE := (0.0 .. 1.0);
    TERM weak := (0, 0.2, 0.3, 0.5);
    TERM strong := (0.5, 0.7, 1, 1);
END_VAR
RULEBLOCK
    RULE 1: IF impact IS high AND cost IS low AND tech IS high THEN priority IS strong;
END_RULEBLOCK
"""


class TestParseRulebase:
    def test_default_rulebase_shape(self):
        config, rulebase = paps.load_default_rulebase()
        assert len(rulebase.rules) == 27
        assert config.input_names() == ["impact", "cost", "tech"]
        assert config.output.term_names() == [
            "optional", "weak", "normal", "strong"]
        assert rulebase.missing_combinations(config) == []

    def test_single_rule(self):
        config, rulebase = parse_rulebase(SMALL)
        (rule,) = rulebase.rules
        assert rule.antecedent == (("impact", "high"), ("cost", "low"),
                                   ("tech", "high"))
        assert rule.consequent == ("priority", "strong")

    def test_undeclared_term_rejected(self):
        bad = SMALL.replace("cost IS low", "cost IS very_high")
        with pytest.raises(FclError, match="very_high"):
            parse_rulebase(bad)

    def test_undeclared_variable_rejected(self):
        bad = SMALL.replace("IF impact IS", "IF price IS")
        with pytest.raises(FclError, match="price"):
            parse_rulebase(bad)

    def test_duplicate_rule_id_rejected(self):
        bad = SMALL.replace(
            "END_RULEBLOCK",
            "    RULE 1: IF impact IS low AND cost IS low AND tech IS low "
            "THEN priority IS weak;\nEND_RULEBLOCK")
        with pytest.raises(FclError, match="duplicate rule id"):
            parse_rulebase(bad)

    def test_syntax_error_carries_position(self):
        bad = SMALL.replace("RANGE := (0.0 .. 1.0);", "RANGE = 0 1", 1)
        with pytest.raises(FclError) as exc:
            parse_rulebase(bad)
        assert exc.value.line == 2
        assert exc.value.column == 5

    def test_missing_combination_reported(self):
        config, rulebase = parse_rulebase(SMALL)
        missing = rulebase.missing_combinations(config)
        assert len(missing) == 7  # 2^3 combinations, one covered
        assert ("high", "low", "high") not in missing

    def test_comments_ignored(self):
        config, rulebase = parse_rulebase(
            "// banner\n# another\n" + SMALL)
        assert len(rulebase.rules) == 1

    def test_malformed_term_breakpoints_rejected(self):
        bad = SMALL.replace("TERM weak := (0, 0.2, 0.3, 0.5);",
                            "TERM weak := (0.5, 0.2, 0.3, 0.5);")
        with pytest.raises(FclError, match="ordered"):
            parse_rulebase(bad)
