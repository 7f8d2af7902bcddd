# MIT License
# Copyright (c) 2026, pyRACE developers
# See the LICENSE file at the root of the distribution.
"""
Command line interface::

    pyrace optimize --data d.csv --label y --seed 7 --out m.json --report r.json
    pyrace predict --model m.json --data new.csv --out predictions.csv
    pyrace inspect --model m.json

Exit codes: 0 success, 1 usage or configuration error, 2 data error, 3 internal error
"""
import logging
import sys
from typing import List, Optional

import click
import pandas

from pyRACE import optimizer
from pyRACE.classifiers import predict_many
from pyRACE.config import build_config, read_config_file
from pyRACE.dataset import load_csv, load_features
from pyRACE.evaluator import confusion, score
from pyRACE.exception import PyRACEConfigException, PyRACEDataException, PyRACEException
from pyRACE.exception import PyRACEInvalidDatasetException
from pyRACE.metric import Metric
from pyRACE.outputs import CSVOutput, PrintOutput
from pyRACE.persistence import atomic_write, load_model, save_model, write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3

U64 = click.IntRange(0, 2 ** 64 - 1)
POSITIVE = click.IntRange(min=1)


def _setup_logging(verbose: bool):
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s %(name)s : %(message)s')


@click.group()
def cli():
    """Race a portfolio of classifiers on a csv dataset"""


@cli.command()
@click.option('--data', required=True, type=str, help='csv file with a header row')
@click.option('--label', required=True, type=str, help='name of the class label column')
@click.option('--seed', type=U64, default=None, help='master seed  [default: 0]')
@click.option('--rounds', type=POSITIVE, default=None, help='maximal number of rounds  [default: 5]')
@click.option('--population', type=click.IntRange(min=2), default=None, help='candidates per round  [default: 16]')
@click.option('--survivors', type=POSITIVE, default=None, help='best performers kept each round  [default: 4]')
@click.option('--fresh', type=click.IntRange(min=0), default=None, help='newly sampled candidates per round  [default: 4]')
@click.option('--families', type=str, default=None, help='comma separated families  [default: logreg,gaussian_nb,knn,tree]')
@click.option('--metric', type=click.Choice(['accuracy', 'macro_f1']), default=None, help='selection measure  [default: accuracy]')
@click.option('--feature-search', type=click.Choice(['on', 'off']), default=None, help='mutate feature masks  [default: on]')
@click.option('--patience', type=POSITIVE, default=None, help='stop after this many rounds without improvement')
@click.option('--min-delta', type=click.FloatRange(min=0.0), default=None, help='smallest counted improvement')
@click.option('--config', 'config_path', type=str, default=None, help='json run configuration')
@click.option('--out', default='model.json', show_default=True, help='model file to write')
@click.option('--report', 'report_path', default='report.json', show_default=True, help='report file to write')
@click.option('--threads', type=POSITIVE, default=None, help='training threads, never changes results  [default: all cores]')
@click.option('--records', type=str, default=None, help='csv file receiving one line per evaluated candidate')
@click.option('--verbose', is_flag=True, default=False, help='log debug messages on standard error')
def optimize(data, label, seed, rounds, population, survivors, fresh, families, metric, feature_search, patience,
             min_delta, config_path, out, report_path, threads, records, verbose):
    """Search the best model for a dataset, then write it with the run report"""
    _setup_logging(verbose)
    file_values = read_config_file(config_path) if config_path is not None else None
    cfg, space = build_config(file_values, seed=seed, rounds=rounds, population=population, survivors=survivors,
                              fresh=fresh, families=families, metric=metric,
                              feature_search=None if feature_search is None else feature_search == 'on',
                              patience=patience, min_delta=min_delta)
    ds = load_csv(data, label)

    model, report = optimizer.run(cfg, ds, space, [PrintOutput()], workers=threads)
    save_model(model, out)
    write_report(report, report_path)
    # the records file is only created once the run succeeded
    if records is not None:
        csv_output = CSVOutput(records, append=False)
        for generation in report.rounds:
            csv_output.add(generation)
        csv_output.save()

    winner = report.winner
    click.echo(f'winner : candidate {winner.id} ({winner.family.name}) | validation {report.winner_score:.6f}'
               f' | test {report.final_test.score:.6f} | mask {winner.mask}')


@cli.command()
@click.option('--model', 'model_path', required=True, type=str, help='model file written by optimize')
@click.option('--data', required=True, type=str, help='csv file holding the model feature columns')
@click.option('--out', default='predictions.csv', show_default=True, help='csv file to write')
@click.option('--label', default=None, type=str, help='label column; if present, the metric is printed')
@click.option('--metric', type=click.Choice(['accuracy', 'macro_f1']), default='accuracy', show_default=True)
def predict(model_path, data, out, label, metric):
    """Predict the class of every row of a csv file"""
    _setup_logging(False)
    model = load_model(model_path)
    rows, labels = load_features(data, model.feature_names, label)
    preds = predict_many(model, rows) if len(rows) else []

    frame = pandas.DataFrame({'prediction': [model.class_names[pred] for pred in preds]})
    atomic_write(out, frame.to_csv(index=False))
    logger.info('wrote %d predictions to %s', len(preds), out)

    if labels:
        unknown = sorted(set(labels) - set(model.class_names))
        if unknown:
            raise PyRACEInvalidDatasetException(f'labels unknown to the model : {", ".join(unknown)}')
        truth = [model.class_names.index(name) for name in labels]
        selected = Metric.from_tag(metric)
        click.echo(f'{selected.tag}: {score(confusion(preds, truth, model.n_classes), selected)}')


@cli.command()
@click.option('--model', 'model_path', required=True, type=str, help='model file written by optimize')
def inspect(model_path):
    """Describe a model file"""
    _setup_logging(False)
    model = load_model(model_path)
    click.echo(f'family: {model.family.tag}')
    click.echo('params: ' + ', '.join(f'{name}={value}' for name, value in model.params))
    click.echo('features: ' + ', '.join(model.feature_names[i] for i in model.mask.indices))
    click.echo('classes: ' + ', '.join(model.class_names))


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the command line interface

    :param argv: arguments, ``sys.argv[1:]`` if None
    :return: the exit code
    """
    try:
        result = cli.main(args=argv, prog_name='pyrace', standalone_mode=False)
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return EXIT_USAGE
    except click.ClickException as exn:
        exn.show(file=sys.stderr)
        return EXIT_USAGE
    except PyRACEConfigException as exn:
        click.echo(f'Error: {exn}', err=True)
        return EXIT_USAGE
    except PyRACEDataException as exn:
        click.echo(f'Error: {exn}', err=True)
        return EXIT_DATA
    except PyRACEException as exn:
        click.echo(f'Internal error: {exn}', err=True)
        return EXIT_INTERNAL
    except Exception as exn:
        logger.exception('unexpected failure')
        click.echo(f'Internal error: {exn!r}', err=True)
        return EXIT_INTERNAL
    return result if isinstance(result, int) else EXIT_OK


def run():
    sys.exit(main())
