"""
The chronos command line.

    chronos run <file|corpus:NAME> [--json] [--mode weak|strong|rho|rho-rho]
                [--tol X] [--tol-prob X] [--workers N]
    chronos check <file|corpus:NAME> [--json] [--mode ...] [--tol X]
    chronos corpus list [--json]

Results go to stdout, log records and error lines to stderr.  Exit status is 0
on success, 1 on any parse, elaboration, query or input error, and 2 when the
run finished but some query found the data inconsistent.
"""

import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import click

from chronos.base.ChronosError import ChronosError
from chronos.framework.ConsistencyChecker import ConsistencyChecker
from chronos.framework.ConsistencyReport import ConsistencyMode
from chronos.midware.Logger import Logger
from chronos.reasoning.Verdict import VerdictKind
from chronos.scenario.Corpus import Corpus
from chronos.scenario.Scenario import Scenario, ScenarioQuery
from chronos.scenario.ScenarioElaborator import ScenarioElaborator
from chronos.scenario.ScenarioError import ScenarioError
from chronos.scenario.ScenarioParser import ScenarioParser
from chronos.cli.QueryResult import QueryResult
from chronos.cli.RunConfig import OutputFormat, RunConfig


RESULTS_SCHEMA = "chronos.results/1"
CHECK_SCHEMA = "chronos.check/1"
CORPUS_SCHEMA = "chronos.corpus/1"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DATA_INCONSISTENT = 2

_MODES = [m.value for m in ConsistencyMode]


def _emitJson(doc: dict) -> None:
    click.echo(json.dumps(doc, sort_keys=True, indent=2))


def _fail(msg: str) -> None:
    Logger.error(msg, "cli")
    click.echo(msg, err=True)
    sys.exit(EXIT_ERROR)


def _load(config: RunConfig) -> Scenario:
    target = config.getTarget()
    try:
        src = Corpus.resolve(target)
        ast = ScenarioParser.parse(src)
        return ScenarioElaborator.elaborate(ast, config.getMode(), config.getTol())
    except ScenarioError as ex:
        _fail(str(ex))
    except ChronosError as ex:
        _fail("{}: {}".format(target, ex))
    except OSError as ex:
        _fail("{}: IO_ERROR {}".format(target, ex.strerror or ex))


def _answer(scenario: Scenario, query: ScenarioQuery, tolProb: float) -> QueryResult:
    start = time.perf_counter()
    try:
        verdict = scenario.answer(query, tolProb)
    except ChronosError as ex:
        elapsed = (time.perf_counter() - start) * 1000.0
        located = ScenarioError.fromEngine(ex, query.span, scenario.getName())
        Logger.error(str(located), "query")
        return QueryResult.fromError(query.name, located.getCode().value, ex.msg, elapsed)
    elapsed = (time.perf_counter() - start) * 1000.0
    Logger.info("{}: {}".format(query.name, verdict), "query")
    return QueryResult.fromVerdict(query.name, verdict, elapsed)


def runQueries(scenario: Scenario, config: RunConfig) -> List[QueryResult]:
    queries = scenario.getQueries()
    if not queries:
        return []
    tolProb = config.getTolProb()
    workers = min(config.getWorkers(), len(queries))
    # map() yields in submission order, so output follows declaration order
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda q: _answer(scenario, q, tolProb), queries))


def exitStatus(results: List[QueryResult]) -> int:
    if any(r.isError() for r in results):
        return EXIT_ERROR
    if any(r.getVerdict() == VerdictKind.DATA_INCONSISTENT.value for r in results):
        return EXIT_DATA_INCONSISTENT
    return EXIT_OK


def resultsDocument(scenario: Scenario, config: RunConfig,
                    results: List[QueryResult]) -> dict:
    return {
        "schema": RESULTS_SCHEMA,
        "scenario": scenario.getName(),
        "mode": config.getMode().value,
        "tol": scenario.getTol(),
        "tolProb": config.getTolProb(),
        "results": [r.toDict() for r in results],
    }


def checkEntries(scenario: Scenario) -> Tuple[List[dict], List[dict]]:
    frameworks = []
    for f in scenario.getDeclaredFrameworks():
        report = f.report
        frameworks.append({
            "name": f.name,
            "mode": report.getMode().value,
            "consistent": bool(report.getVerdict()),
            "expectInconsistent": f.expectInconsistent,
            "elements": f.decomposition.size(),
            "dropped": f.droppedCount,
            "worstPair": None if report.getWorstPair() is None
            else list(report.getWorstPair()),
            "worstMagnitude": report.getWorstMagnitude(),
            "threshold": report.getThreshold(),
        })
    histories = []
    for name, h in scenario.getHistories().items():
        diag = ConsistencyChecker.historyDiagnostic(h, scenario.getFamily(),
                                                    scenario.getMetric())
        histories.append({"name": name, "diagnostic": diag})
    return frameworks, histories


# ***********************************************************************


@click.group()
@click.option("--log-level", default=None,
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              help="Log level for stderr records (default WARNING, or CHRONOS_LOG_LEVEL).")
def chronos(log_level):
    """Consistent-histories reasoning over scenario files."""
    if (log_level is not None):
        Logger.setLevel(log_level)
    elif os.getenv("CHRONOS_LOG_LEVEL") is None:
        Logger.setLevel("WARNING")


def _scenarioOptions(fn):
    fn = click.option("--tol", type=float, default=None,
                      help="Structural tolerance; overrides the scenario and CHRONOS_TOL.")(fn)
    fn = click.option("--mode", type=click.Choice(_MODES), default=None,
                      help="Consistency condition (default strong).")(fn)
    fn = click.option("--json", "asJson", is_flag=True, help="Machine-readable output.")(fn)
    fn = click.argument("target")(fn)
    return fn


def _config(target, asJson, mode, tol, tolProb=None, workers=None) -> RunConfig:
    try:
        return RunConfig(target, OutputFormat.JSON if asJson else OutputFormat.TEXT,
                         None if mode is None else ConsistencyMode(mode), tol, tolProb, workers)
    except ChronosError as ex:
        _fail(str(ex))


@chronos.command()
@_scenarioOptions
@click.option("--tol-prob", "tolProb", type=float, default=None,
              help="Probabilities this close to 0 or 1 are reported as false or true.")
@click.option("--workers", type=int, default=None, help="Threads used to answer queries.")
def run(target, asJson, mode, tol, tolProb, workers):
    """Run every query of a scenario file or corpus:NAME."""
    config = _config(target, asJson, mode, tol, tolProb, workers)
    scenario = _load(config)
    results = runQueries(scenario, config)
    if config.isJson():
        _emitJson(resultsDocument(scenario, config, results))
    else:
        for r in results:
            click.echo(r.toText())
    for r in results:
        if r.isError():
            click.echo("{}: query {}: {} {}".format(scenario.getName(), r.getId(),
                                                     r.getError()["code"],
                                                     r.getError()["message"]), err=True)
    sys.exit(exitStatus(results))


@chronos.command()
@_scenarioOptions
def check(target, asJson, mode, tol):
    """Print the consistency report of every declared framework."""
    config = _config(target, asJson, mode, tol)
    scenario = _load(config)
    frameworks, histories = checkEntries(scenario)
    if config.isJson():
        _emitJson({"schema": CHECK_SCHEMA, "scenario": scenario.getName(),
                   "mode": config.getMode().value, "frameworks": frameworks,
                   "histories": histories})
        sys.exit(EXIT_OK)
    for f in frameworks:
        flag = "  expect-inconsistent" if f["expectInconsistent"] else ""
        click.echo("framework {}: {} ({} consistency){}".format(
            f["name"], "consistent" if f["consistent"] else "inconsistent", f["mode"], flag))
        click.echo("  elements {}, dropped {}, worst pair {} magnitude {:.6g}".format(
            f["elements"], f["dropped"], f["worstPair"], f["worstMagnitude"]))
    for h in histories:
        click.echo("history {}: |<K(Y), K(I - Y)>| = {:.6g}".format(h["name"], h["diagnostic"]))
    sys.exit(EXIT_OK)


@chronos.group()
def corpus():
    """The bundled scenario corpus."""


@corpus.command("list")
@click.option("--json", "asJson", is_flag=True, help="Machine-readable output.")
def listCorpus(asJson):
    """List the corpus entries usable as corpus:NAME."""
    entries = Corpus.list()
    if asJson:
        _emitJson({"schema": CORPUS_SCHEMA, "entries": [e.toDict() for e in entries]})
        return
    width = max(len(e.name) for e in entries)
    for e in entries:
        where = "" if (e.section is None) else "[section {}] ".format(e.section)
        click.echo("{}  {}{}".format(e.name.ljust(width), where, e.description))


def main():
    chronos(prog_name="chronos")
