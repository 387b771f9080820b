""" Exception hierarchy; the CLI maps these onto exit codes """

class QcorrError(Exception):
    """ Base class for all library errors """
    exit_code = 1

class UsageError(QcorrError):
    """ Bad arguments, unsupported class/k combinations, unknown names """
    exit_code = 2

class SizeError(UsageError):
    """ Requested object exceeds the configured dense or memory limit """

class ContractError(QcorrError):
    """ A numerical pre- or post-condition does not hold """
    exit_code = 3

class NumericalError(ContractError):
    """ A numerical routine failed to produce a trustworthy result """
