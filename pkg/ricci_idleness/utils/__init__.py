# Copyright 2026 The Kubernetes Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from .rational import decimal_hint, format_rational, parse_rational
from .report_file import ReportFile
from .cli_parser import add_pydantic_args, unflatten_dict

__all__ = ["ReportFile", "add_pydantic_args", "decimal_hint", "format_rational", "parse_rational", "unflatten_dict"]
