# ------------------------------------------------------------
# Services layer
# ------------------------------------------------------------
# Domain logic lives here, decoupled from the command line.
# badseq/cli.py only parses arguments, picks the config and
# maps exceptions onto exit codes; generation, verification,
# search and encoding all belong in services.
# ------------------------------------------------------------
