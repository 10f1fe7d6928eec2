# the three-box paradox, run from the bundled corpus: each intermediate box is
# certain in its own framework, and asking for both is meaningless

from chronos.midware.Logger import Logger
from chronos.scenario.Corpus import Corpus
from chronos.scenario.ScenarioParser import ScenarioParser
from chronos.scenario.ScenarioElaborator import ScenarioElaborator


if __name__ == "__main__":
    scenario = ScenarioElaborator.elaborate(ScenarioParser.parse(Corpus.load("three-state")))

    for f in scenario.getDeclaredFrameworks():
        Logger.info("framework {}: {}".format(f.name, f.report), "example")

    for query in scenario.getQueries():
        verdict = scenario.answer(query)
        Logger.info("{}: {}".format(query.name, verdict), "example")
