"""
This module reads the engine defaults from config/config.toml. The config object is used
throughout the package, so changing a default truncation, parallelism or findings path
can be as easy as only touching the .toml.
"""
import pathlib
import tomli

# config/ sits next to the pi_cocharacters package, so the path does not depend on the
# working directory `cochar` is started from.
CONFIG_PATH = pathlib.Path(__file__).parent.parent / "config" / "config.toml"

with open(file=CONFIG_PATH, mode="rb") as config_file:
    config = tomli.load(config_file)
