# type:ignore
# flake8: noqa
import fileinput
import sys

from invoke import task

VERSION_FILE = "iex/__init__.py"


def _read_version():
    import iex

    return iex.__version__


def _rewrite_version(make):
    """Replace the __version__ line of VERSION_FILE with make(major, minor, rev)"""
    version = None
    for line in fileinput.input(VERSION_FILE, inplace=True):
        if line.startswith("__version__"):
            parts = line.split("=", 1)[1].strip().strip('"').split(".")
            version = make(int(parts[0]), int(parts[1]), int(parts[2]))
            line = f'__version__ = "{version}"\n'
        print(line, end="")
    return version


@task
def setup(c):
    """Install required python packages for development through pip"""
    c.run("pip3 install -r requirements.txt")
    c.run("pip3 install -r requirements_dev.txt")
    c.run("pip3 install -r requirements_doc.txt")
    print("---Python packages all setup")


@task
def builddoc(c):
    """Build sphinx doc"""
    c.run("sphinx-build doc/source doc/build")


@task(builddoc)
def build(c):
    """Build python package"""
    c.run("python3 -m build")


@task(help={"slow": "Also run the exhaustive oracle scans"})
def test(c, slow=False):
    """Run pytest tests with coverage"""
    flags = " --slow" if slow else ""
    c.run(f"python3 -m pytest -v --cov=iex --cov-report=term-missing{flags}")


@task(
    help={
        "n": "Number of variables",
        "n1": "Positive literals per term",
        "n0": "Negative literals per term",
        "h": "Terms per DNF",
        "trials": "DNFs sampled per row of the sweep",
        "out": "CSV file",
    }
)
def bench(c, n=50, n1=5, n0=4, h=50, trials=5, out="bench.csv"):
    """Random DNF model counting benchmark written as CSV"""
    c.run(
        f"iex bench-dnf --n {n} --n1 {n1} --n0 {n0} --h {h} "
        f"--trials {trials} --out {out}"
    )
    print(f"---Benchmark written to {out}")


@task
def bumpversion_test(c):
    """Bump version to {current-version}.dev.{date}

    Used for marking development releases for test-pypi
    """
    import time

    stamp = int(time.time())
    version = _rewrite_version(
        lambda major, minor, rev: f"{major}.{minor}.{rev}.dev.{stamp}"
    )
    print(f"Version set to {version}")


@task(
    help={
        "message": "Custom message for tag. Defaults to `Release vXX`, where XX is auto determined",
        "inc": "Revision class increment position. major=X.2.3, minor==1.X.3, rev==1.2.X. Defaults to rev",
    }
)
def createrelease(c, message=None, inc="rev"):
    """Create GitHub release

    Tests must pass, then the current version is tagged, bumped in
    iex/__init__.py and committed. Nothing is pushed.
    """
    import pytest

    if pytest.main(["-q"]):
        raise Exception("Some tests are failing, cannot create release")

    v = _read_version()
    if not message:
        message = f"Release v{v}"
    print("Creating tagged commit")
    c.run(f'git tag -a v{v} -m "{message}"')

    def bump(major, minor, rev):
        if inc == "major":
            return f"{major + 1}.0.0"
        if inc == "minor":
            return f"{major}.{minor + 1}.0"
        return f"{major}.{minor}.{rev + 1}"

    version = _rewrite_version(bump)
    c.run(f"git add {VERSION_FILE}")
    c.run(f'git commit -s -m "Bump to version v{version}"')


@task
def precommit(c):
    """Run precommit checks"""
    c.run("pre-commit run --all-files")


@task
def changelog(c, since=None):
    """Print changelog from last release"""
    if not since:
        r = c.run("git describe --abbrev=0 --tags", encoding="utf-8", hide=True)
        since = r.stdout.splitlines()[0]
    r = c.run(f"git log {since}..HEAD --format=%s", encoding="utf-8", hide=True)
    print(f"Changes since {since}:")
    for change in r.stdout.splitlines():
        print(f"- {change}")
