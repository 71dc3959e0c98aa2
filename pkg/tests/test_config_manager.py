"""
Configuration defaults, environment overrides and validation
"""
from src.config_manager import ConfigManager


def test_defaults():
    config = ConfigManager()
    assert config.get_alphabet() == "xD"
    assert config.get_safety_limit() == 12
    assert config.get_default_max_n() == 8
    assert config.get_family_limits() == (5, 6)
    assert config.get_log_level() == "WARNING"
    assert config.get_log_file() == ""
    assert config.validate_config() == []


def test_dotted_get():
    config = ConfigManager()
    assert config.get("verification.safety_limit") == 12
    assert config.get("verification.missing", "fallback") == "fallback"
    assert config.get("alphabet.too.deep") is None


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("DYCK_ALPHABET", "()")
    monkeypatch.setenv("DYCK_SAFETY_LIMIT", "9")
    monkeypatch.setenv("DYCK_LOG_LEVEL", "debug")
    config = ConfigManager()
    assert config.get_alphabet() == "()"
    assert config.get_safety_limit() == 9
    assert config.get_log_level() == "DEBUG"
    assert config.validate_config() == []


def test_env_file(tmp_path):
    env_file = tmp_path / "settings.env"
    env_file.write_text("DYCK_FAMILY_MAX_VERTICES=4\nDYCK_FAMILY_MAX_CYCLES=3\n")
    config = ConfigManager(str(env_file))
    assert config.get_family_limits() == (4, 3)


def test_dotenv_in_working_directory(tmp_path):
    (tmp_path / ".env").write_text("DYCK_DEFAULT_MAX_N=3\n")
    assert ConfigManager().get_default_max_n() == 3


def test_malformed_integer_falls_back(monkeypatch):
    monkeypatch.setenv("DYCK_SAFETY_LIMIT", "many")
    config = ConfigManager()
    assert config.get_safety_limit() == 12
    issues = config.validate_config()
    assert len(issues) == 1
    assert "DYCK_SAFETY_LIMIT" in issues[0]


def test_validation_issues(monkeypatch):
    monkeypatch.setenv("DYCK_ALPHABET", "xx")
    monkeypatch.setenv("DYCK_SAFETY_LIMIT", "4")
    monkeypatch.setenv("DYCK_DEFAULT_MAX_N", "5")
    monkeypatch.setenv("DYCK_FAMILY_MAX_CYCLES", "0")
    monkeypatch.setenv("DYCK_LOG_LEVEL", "LOUD")
    issues = ConfigManager().validate_config()
    assert len(issues) == 4
    assert any("Alphabet" in issue for issue in issues)
    assert any("Default max-n 5" in issue for issue in issues)
    assert any("Family search" in issue for issue in issues)
    assert any("LOUD" in issue for issue in issues)


def test_alphabet_must_be_printable(monkeypatch):
    monkeypatch.setenv("DYCK_ALPHABET", "x\t")
    assert ConfigManager().validate_config() == ["Alphabet 'x\\t' must use printable ASCII characters"]


def test_summary():
    summary = ConfigManager().get_config_summary()
    assert summary.startswith("Configuration:")
    assert "safety limit: 12" in summary
    assert "log file: (none)" in summary
