""" HTTP surface for invariants, witness constants, concurrences and typicality parameters """

# Import necessary libraries
import time
import logging
import datetime
from flask_cors import CORS
from flask import Flask, request, jsonify

# Import custom modules
from config.constants import MAX_GAUSS_PAIR_MODES
from utils.errors import ContractError, QcorrError, UsageError
from utils.helpers import formatRational
from linalg_core.serialization import operatorFromJson, vectorFromJson
from coherent_classes.carriers import specFromOptions
from coherent_classes.invariants import pureInvariant
from witnesses.bilinear import bilinearConstant, bilinearWitness, witnessSummary
from concurrence.uhlmann import wootters2q
from concurrence.gaussian_four_mode import convexGaussian, gaussFidelity
from typicality.bounds import lowerBound, spectrumProfile
from typicality.parameters import classParams, paramsSummary

# Create a logger for this module
logger = logging.getLogger(__name__)

# Initialize Flask app
app = Flask(__name__)
CORS(app)

def _elapsed(start: float) -> str:
    duration = time.time() - start
    return f"{duration * 1000:.2f} ms" if duration < 1 else f"{duration:.2f} sec"

def _respond(handler):
    """ Run a handler on the JSON body and map library errors onto status codes """
    start = time.time()
    try:
        body = request.get_json(silent=True)
        if not isinstance(body, dict):
            return jsonify({"success": False, "error": "A JSON object body is required"}), 400
        result = handler(body)
        elapsed = _elapsed(start)
        logger.info(f"Served {request.path} in {elapsed}")
        return jsonify({"success": True, "result": result, "processing_time": elapsed})
    except UsageError as e:
        return jsonify({"success": False, "error": str(e)}), 400
    except ContractError as e:
        return jsonify({"success": False, "error": str(e)}), 422
    except QcorrError as e:
        return jsonify({"success": False, "error": str(e)}), 400
    except Exception as e:
        logger.exception(f"Error in {request.path}")
        return jsonify({"success": False, "error": f"Server error: {str(e)}"}), 500

def _requireState(body):
    if "state" not in body:
        raise UsageError("state is required")
    return body["state"]

@app.route('/class/invariant', methods=['POST'])
def classInvariant():
    """ Pure-state invariant <psi^k|A|psi^k> of a vector against a class """
    def handler(body):
        spec = specFromOptions(body)
        psi = vectorFromJson(_requireState(body))
        return {"class": spec.tag, "invariant": pureInvariant(psi, spec)}
    return _respond(handler)

@app.route('/witness/constant', methods=['POST'])
def witnessConstant():
    """ Exact c, alpha and beta of the bilinear witness """
    def handler(body):
        spec = specFromOptions(body)
        if spec.tag == 'gauss' and spec.d > MAX_GAUSS_PAIR_MODES:
            # Only the constant is cheap at larger mode counts
            return {"class": spec.tag, "dims": list(spec.dims), "c": formatRational(bilinearConstant(spec))}
        return witnessSummary(bilinearWitness(spec))
    return _respond(handler)

@app.route('/conc/two-qubit', methods=['POST'])
def twoQubitConcurrence():
    def handler(body):
        rho = operatorFromJson(_requireState(body), hermitian=True)
        return {"concurrence": wootters2q(rho)}
    return _respond(handler)

@app.route('/conc/gauss4', methods=['POST'])
def gaussFourMode():
    """ Convex-Gaussian decision for an even four-mode state, plus the Gaussian fidelity when it applies """
    def handler(body):
        rho = operatorFromJson(_requireState(body), hermitian=True)
        _, report = convexGaussian(rho)
        try:
            report.update(gaussFidelity(rho))
        except ContractError:
            report["fidelity"] = None
        return report
    return _respond(handler)

@app.route('/typicality/params', methods=['POST'])
def typicalityParams():
    def handler(body):
        spec = specFromOptions(body)
        params = classParams(spec)
        result = paramsSummary(params)
        if body.get("spectrum") is not None:
            spectrum = spectrumProfile(body["spectrum"])
            kind = 'bilinear' if params.k == 2 else 'klinear'
            result["analytic_bound"] = lowerBound(spectrum, params, kind)
        return result
    return _respond(handler)

# Health Check Endpoints
@app.route("/health", methods=["GET"])
def healthCheck():
    """ Basic health check """
    return {
        "status": "healthy",
        "timestamp": datetime.datetime.utcnow().isoformat(),
        "service": "qcorr-api"
    }
