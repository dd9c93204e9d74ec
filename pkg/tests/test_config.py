from pi_cocharacters.config import CONFIG_PATH, config


def test_config_is_read_from_the_package_relative_path():
    assert CONFIG_PATH.is_file()
    assert CONFIG_PATH.parent.name == "config"
    assert (CONFIG_PATH.parents[1] / "pi_cocharacters" / "config.py").is_file()


def test_config_defaults():
    defaults = config["CONFIG"]
    assert defaults["default_truncation"] == 12
    assert defaults["parallelism"] == 1
    assert defaults["output_format"] in ("text", "json", "csv")
    assert defaults["verify_max_degree"] == 12
    assert defaults["restriction_max_degree"] == 8
    assert defaults["powertools_service_name"] == "cochar"
